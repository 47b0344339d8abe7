"""Command-line front end.

Exit status is 0 on success, 1 on domain errors (bad matrices, non-solutions,
non-integral jumps) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dio, exmat, seed
from .emit import dumps, fmt_tuple, tree_to_dot, tree_to_json
from .fixtures import FIXTURES, SYSTEM_MATRIX
from .laurent import render


class ParseError(ValueError):
    pass


def parse_matrix_source(source: str) -> exmat.ExchangeMatrix:
    """Resolve a fixture name or a JSON matrix file (fields n, mutable, rows)."""
    if source in FIXTURES:
        return FIXTURES[source]()
    path = Path(source)
    if not path.exists():
        raise ParseError(f"{source!r} is neither a fixture ({', '.join(FIXTURES)}) nor a file")
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise ParseError(f"{source}: line {err.lineno}: {err.msg}") from err
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object")
    return exmat.ExchangeMatrix.from_dict(doc)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from err


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from err
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _matrix_doc(b: exmat.ExchangeMatrix) -> dict:
    doc = b.to_dict()
    doc["skew_symmetrizer"] = list(b.skew_symmetrizer())
    return doc


def _print_matrix(b: exmat.ExchangeMatrix, out) -> None:
    width = max(len(str(x)) for r in b.rows for x in r)
    for r in b.rows:
        print("  ".join(str(x).rjust(width) for x in r), file=out)
    print(f"mutable: {sorted(b.mutable)}", file=out)


def cmd_mutate(args, out):
    b = parse_matrix_source(args.source)
    m = exmat.mutate_matrix(b, args.k)
    if args.format == "json":
        out.write(dumps(_matrix_doc(m)))
    else:
        _print_matrix(m, out)


def cmd_class(args, out):
    b = parse_matrix_source(args.source)
    mc = exmat.mutation_class(b, args.limit)
    doc = {
        "raw_class_size": len(mc.raw_class),
        "iso_classes": [m.to_dict() for m in sorted(mc.iso_classes, key=exmat.canonical_form)],
        "finite": mc.finite,
    }
    if args.format == "json":
        out.write(dumps(doc))
    else:
        print(f"raw class: {len(mc.raw_class)} matrices", file=out)
        print(f"isomorphism classes: {len(mc.iso_classes)}", file=out)
        print(f"finite: {'yes' if mc.finite else 'no (truncated)'}", file=out)


def cmd_grading(args, out):
    b = parse_matrix_source(args.source)
    basis = exmat.grading_vectors(b)
    if args.format == "json":
        out.write(dumps({"basis": [[str(x) for x in v] for v in basis]}))
    else:
        for v in basis:
            print(fmt_tuple(v), file=out)
        if not basis:
            print("(no nonzero grading)", file=out)


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_invariant(args, out):
    t = seed.build_invariant(args.system)
    doc = {"system": args.system, "numerator": render(t.num), "denominator": render(t.den)}
    if args.eval:
        doc["value"] = _frac(dio.eval_invariant(args.system, args.eval))
    if args.format == "json":
        out.write(dumps(doc))
    else:
        print(f"T = ({doc['numerator']}) / ({doc['denominator']})", file=out)
        if "value" in doc:
            print(f"T{fmt_tuple(args.eval)} = {doc['value']}", file=out)


def cmd_verify_invariance(args, out):
    systems = [args.system] if args.system else list(seed.SYSTEMS)
    reports = [seed.verify_invariance(s) for s in systems]
    if args.format == "json":
        out.write(dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            for k, ok in r.results.items():
                print(f"{r.system} mu_{k}: {'pass' if ok else 'FAIL'}", file=out)
            for note in r.notes:
                print(f"{r.system} note: {note}", file=out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_audit(args, out):
    if args.word is not None:
        b = SYSTEM_MATRIX[args.system]()
        s = seed.apply_word(seed.initial_seed(b), args.word)
        reports = [seed.audit_seed(s, seed.SYSTEM_GRADING[args.system], seed.ALLOWED_DEGREES[args.system])]
    else:
        reports = seed.random_audit(args.system, args.random_words, args.max_len, args.rng_seed)
    bad = [r for r in reports if not r.ok]
    if args.format == "json":
        doc = {"system": args.system, "checked": len(reports), "failures": [r.to_dict() for r in bad]}
        if args.word is not None:
            doc["report"] = reports[0].to_dict()
        out.write(dumps(doc))
    else:
        if args.word is not None:
            print(f"word {list(args.word)}: degrees {reports[0].degrees}", file=out)
        print(f"{args.system}: {len(reports)} seeds audited, {len(bad)} failures", file=out)
        for r in bad:
            print(f"  word {list(r.word)}: {'; '.join(r.failures)}", file=out)
    return 0 if not bad else 1


def cmd_descend(args, out):
    word = dio.descend(args.system, args.tuple)
    if args.format == "json":
        out.write(dumps({"system": args.system, "tuple": [str(x) for x in args.tuple], "word": list(word)}))
    else:
        print(" ".join(str(k) for k in word) if word else "(empty word)", file=out)


def cmd_tree(args, out):
    root = args.root or dio.fundamental(args.system)
    tree = dio.enumerate_solutions(args.system, root, args.depth, args.bound)
    if args.format == "dot":
        out.write(tree_to_dot(tree))
    elif args.format == "json":
        out.write(dumps(tree_to_json(tree)))
    else:
        depth = tree.depth_of()
        for t in tree.nodes:
            print(f"{'  ' * depth[t]}{fmt_tuple(t)}", file=out)


def _tuples_doc(ts):
    return [[str(x) for x in t] for t in sorted(ts)]


def cmd_oracle(args, out):
    sols = dio.oracle_solutions(args.system, args.bound)
    if args.format == "json":
        out.write(dumps({"system": args.system, "bound": str(args.bound), "count": str(len(sols)),
                         "solutions": _tuples_doc(sols)}))
    else:
        for t in sorted(sols):
            print(fmt_tuple(t), file=out)
        print(f"{len(sols)} solutions with entries <= {args.bound}", file=out)


def cmd_uniqueness(args, out):
    cols = dio.uniqueness_scan(args.system, args.bound)
    if args.format == "json":
        out.write(dumps({"system": args.system, "bound": str(args.bound),
                         "collisions": [{"a": str(c.a), "pairs": _tuples_doc(c.pairs)} for c in cols]}))
    else:
        for c in cols:
            print(f"a={c.a}: " + ", ".join(fmt_tuple(p) for p in c.pairs), file=out)
        if not cols:
            print("no collisions", file=out)


def _report_out(rep: dio.SearchReport, args, out):
    if args.format == "json":
        out.write(dumps(rep.to_dict()))
    else:
        for note in rep.notes:
            print(f"# {note}", file=out)
        c = rep.counts
        print(f"oracle {c['oracle']}, reachable {c['reachable']}, unreachable {c['unreachable']}", file=out)
        mv = rep.multiset_view()
        print(f"multiset view: oracle {len(mv['oracle'])}, reachable {len(mv['reachable'])}, "
              f"unreachable {len(mv['unreachable'])}", file=out)
        for t in sorted(rep.unreachable_set):
            print(f"unreachable {fmt_tuple(t)}", file=out)


def cmd_reach(args, out):
    _report_out(dio.rank4_reachability(args.bound), args, out)


def cmd_group_orbit(args, out):
    _report_out(dio.group_orbit(args.bound), args, out)


def cmd_relations(args, out):
    rep = dio.verify_group_relations(args.trials, args.rng_seed)
    if args.format == "json":
        out.write(dumps(rep.to_dict()))
    else:
        for name in rep.symbolic:
            sym = "pass" if rep.symbolic[name] else "FAIL"
            num = "pass" if rep.numeric[name] else "FAIL"
            print(f"{name}: symbolic {sym}, numeric {num}", file=out)
        for gen, ok in rep.invariance.items():
            print(f"T o {gen} = T: {'pass' if ok else 'FAIL'}", file=out)
    return 0 if rep.passed else 1


def cmd_exchange_graph(args, out):
    b = parse_matrix_source(args.source)
    g = seed.enumerate_exchange_graph(seed.initial_seed(b), args.max)
    if args.format == "json":
        out.write(dumps({
            "clusters": str(len(g.clusters)),
            "variables": sorted(render(v) for v in g.variables),
            "complete": g.complete,
        }))
    else:
        print(f"clusters: {len(g.clusters)}", file=out)
        print(f"cluster variables: {len(g.variables)}", file=out)
        print(f"complete: {'yes' if g.complete else 'no (truncated)'}", file=out)


def cmd_seed(args, out):
    b = parse_matrix_source(args.source)
    s = seed.apply_word(seed.initial_seed(b), args.word or ())
    if args.format == "json":
        out.write(dumps(s.to_dict()))
    else:
        _print_matrix(s.matrix, out)
        print(f"history: {list(s.history)}", file=out)
        for i, v in enumerate(s.vars, start=1):
            print(f"x{i}' = {render(v)}", file=out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clustervieta", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, formats=("human", "json")):
        sp = sub.add_parser(name)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=formats, default="human")
        return sp

    systems = list(seed.SYSTEMS)

    sp = add("mutate", cmd_mutate)
    sp.add_argument("--source", required=True)
    sp.add_argument("--k", type=_positive, required=True)

    sp = add("class", cmd_class)
    sp.add_argument("--source", required=True)
    sp.add_argument("--limit", type=_positive, default=1000)

    sp = add("grading", cmd_grading)
    sp.add_argument("--source", required=True)

    sp = add("invariant", cmd_invariant)
    sp.add_argument("--system", choices=systems, required=True)
    sp.add_argument("--eval", type=_ints)

    sp = add("verify-invariance", cmd_verify_invariance)
    sp.add_argument("--system", choices=systems)

    sp = add("audit", cmd_audit)
    sp.add_argument("--system", choices=systems, required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", type=_ints)
    g.add_argument("--random-words", type=_positive)
    sp.add_argument("--max-len", type=_nonneg, default=8)
    sp.add_argument("--rng-seed", type=int, default=0)

    sp = add("descend", cmd_descend)
    sp.add_argument("--system", choices=["markov", "variant"], required=True)
    sp.add_argument("--tuple", type=_ints, required=True)

    sp = add("tree", cmd_tree, formats=("human", "json", "dot"))
    sp.add_argument("--system", choices=systems, required=True)
    sp.add_argument("--depth", type=_nonneg, default=3)
    sp.add_argument("--bound", type=_positive)
    sp.add_argument("--root", type=_ints)

    sp = add("oracle", cmd_oracle)
    sp.add_argument("--system", choices=systems + ["variant-tau"], required=True)
    sp.add_argument("--bound", type=_positive, required=True)

    sp = add("uniqueness", cmd_uniqueness)
    sp.add_argument("--system", choices=["markov", "variant"], required=True)
    sp.add_argument("--bound", type=_positive, required=True)

    sp = add("reach", cmd_reach)
    sp.add_argument("--bound", type=_positive, required=True)

    sp = add("group-orbit", cmd_group_orbit)
    sp.add_argument("--bound", type=_positive, required=True)

    sp = add("relations", cmd_relations)
    sp.add_argument("--trials", type=_positive, default=100)
    sp.add_argument("--rng-seed", type=int, default=0)

    sp = add("exchange-graph", cmd_exchange_graph)
    sp.add_argument("--source", required=True)
    sp.add_argument("--max", type=_positive, default=1000)

    sp = add("seed", cmd_seed)
    sp.add_argument("--source", required=True)
    sp.add_argument("--word", type=_ints)

    return p


DOMAIN_ERRORS = (ValueError, ArithmeticError, IndexError, RuntimeError)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args, out)
    except DOMAIN_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
