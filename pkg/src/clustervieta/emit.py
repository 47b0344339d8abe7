"""Machine-readable output: DOT and JSON for solution trees, JSON for everything else."""

from __future__ import annotations

import json

from .dio import SolutionTree


def fmt_tuple(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def tree_to_json(tree: SolutionTree) -> dict:
    return {
        "system": tree.system,
        "directed": tree.directed,
        "nodes": [[str(x) for x in t] for t in tree.nodes],
        "edges": [[i, j, k] for i, j, k in tree.edges],
    }


def tree_from_json(doc: dict | str) -> SolutionTree:
    if isinstance(doc, str):
        doc = json.loads(doc)
    nodes = [tuple(int(x) for x in t) for t in doc["nodes"]]
    edges = [(int(i), int(j), int(k)) for i, j, k in doc["edges"]]
    return SolutionTree(doc["system"], nodes, edges)


def tree_to_dot(tree: SolutionTree, name: str | None = None) -> str:
    """DOT text; undirected for involutive systems, directed for rank 4."""
    kind, arrow = ("digraph", "->") if tree.directed else ("graph", "--")
    name = name or f"{tree.system}_solutions"
    lines = [f"{kind} {name} {{"]
    for i, t in enumerate(tree.nodes):
        # rank-4 labels omit the frozen entry
        shown = t[:4] if tree.system == "rank4" else t
        style = ", style=filled" if i == 0 else ""
        lines.append(f'  n{i} [label="{fmt_tuple(shown)}"{style}];')
    for i, j, k in tree.edges:
        lines.append(f'  n{i} {arrow} n{j} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
