"""Vieta jumping on integer tuples.

The mutation maps of each system act on tuples of positive integers.  On the
level set of the system's invariant every image is again integral, which is
what makes descent, tree enumeration and reachability searches possible.

Systems
-------
``markov``       a^2 + b^2 + c^2 = 3abc
``variant``      a^2 + b^4 + c^4 + 2ab^2 + 2ac^2 = 7ab^2c^2
``variant-tau``  A^2 + B^2 + C^2 + 2AB + 2AC = 7ABC, i.e. (a, b^2, c^2)
``rank4``        the torus-minus-disk invariant equal to 9, frozen entry last
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Tuple = tuple[int, ...]

ARITY = {"markov": 3, "variant": 3, "variant-tau": 3, "rank4": 5}
LEVEL = {"markov": 3, "variant": 7, "variant-tau": 7, "rank4": 9}
LABELS = {"markov": (1, 2, 3), "variant": (1, 2, 3), "variant-tau": (1, 2, 3), "rank4": (1, 2, 3, 4)}
RANK4_INVERSE = {1: 2, 2: 1, 3: 4, 4: 3}


class NonIntegralError(ArithmeticError):
    """A mutation produced a non-integer: the input is off the invariant's level set."""


class NotASolutionError(ValueError):
    pass


class DescentError(RuntimeError):
    """Descent stalled before reaching the fundamental solution."""


def fundamental(system: str) -> Tuple:
    return (1,) * ARITY[system]


def _check(system: str, t: Sequence) -> None:
    if system not in ARITY:
        raise ValueError(f"unknown system {system!r}")
    if len(t) != ARITY[system]:
        raise ValueError(f"{system} tuples have length {ARITY[system]}, got {len(t)}")
    if any(x <= 0 for x in t):
        raise ValueError(f"entries must be positive: {tuple(t)}")


def _div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegralError(f"{num}/{den} is not an integer")
    return q


def numeric_mutate(system: str, t: Sequence[int], k: int) -> Tuple:
    """Apply the mutation map ``mu_k`` of ``system`` to an integer tuple."""
    _check(system, t)
    if k not in LABELS[system]:
        raise IndexError(f"{system} has no map {k}")
    if system == "markov":
        a, b, c = t
        if k == 1:
            return (_div(b * b + c * c, a), b, c)
        if k == 2:
            return (a, _div(c * c + a * a, b), c)
        return (a, b, _div(a * a + b * b, c))
    if system == "variant":
        a, b, c = t
        if k == 1:
            return (_div(b**4 + c**4, a), b, c)
        if k == 2:
            return (a, _div(a + c * c, b), c)
        return (a, b, _div(a + b * b, c))
    if system == "variant-tau":
        a, b, c = t
        if k == 1:
            return (_div(b * b + c * c, a), b, c)
        if k == 2:
            return (a, _div((a + c) ** 2, b), c)
        return (a, b, _div((a + b) ** 2, c))
    a, b, c, d, e = t
    if k == 1:
        return (b, _div(b * b + c * d, a), c, d, e)
    if k == 2:
        return (_div(a * a + c * d, b), a, c, d, e)
    if k == 3:
        return (d, a, b, _div(a * e + b * d, c), e)
    return (b, c, _div(a * c + b * e, d), a, e)


def tau_mutate(t: Sequence[int], k: int) -> Tuple:
    return numeric_mutate("variant-tau", t, k)


def eval_invariant(system: str, t: Sequence) -> Fraction:
    """Exact value of the system's invariant at ``t`` (integers or Fractions)."""
    if len(t) != ARITY[system]:
        raise ValueError(f"{system} tuples have length {ARITY[system]}")
    if any(x <= 0 for x in t):
        raise ValueError("entries must be positive")
    if system == "markov":
        a, b, c = t
        return Fraction(a * a + b * b + c * c) / (a * b * c)
    if system == "variant":
        a, b, c = t
        return Fraction(a * a + b**4 + c**4 + 2 * a * b * b + 2 * a * c * c) / (a * b * b * c * c)
    if system == "variant-tau":
        a, b, c = t
        return Fraction(a * a + b * b + c * c + 2 * a * b + 2 * a * c) / (a * b * c)
    u1, u2, u3, u4, u5 = t
    num = (
        u1 * u2 * u5**2 + u1**2 * u4 * u5 + u3 * u4**2 * u5
        + u2**2 * u3 * u5 + u1 * u2 * u4**2 + u2**2 * u4 * u5
        + u1 * u2 * u3**2 + u1**2 * u3 * u5 + u3**2 * u4 * u5
    )
    return Fraction(num) / (u1 * u2 * u3 * u4)


def is_solution(system: str, t: Sequence[int]) -> bool:
    return eval_invariant(system, t) == LEVEL[system]


def replay(system: str, word: Iterable[int], start: Sequence[int] | None = None) -> Tuple:
    t = tuple(start) if start is not None else fundamental(system)
    for k in word:
        t = numeric_mutate(system, t, k)
    return t


# -- descent ---------------------------------------------------------------


def _argmax(t: Sequence[int]) -> int:
    m = max(t)
    return t.index(m) + 1


def markov_descend(t: Sequence[int]) -> tuple[int, ...]:
    """Mutation word taking (1,1,1) to the Markov triple ``t``.

    Repeatedly jumps the largest entry (smallest index on ties); each jump
    strictly lowers the maximum, so the loop ends at (1,1,1).
    """
    t = tuple(t)
    _check("markov", t)
    if not is_solution("markov", t):
        raise NotASolutionError(f"{t} is not a Markov triple")
    recorded = []
    while t != (1, 1, 1):
        k = _argmax(t)
        nxt = numeric_mutate("markov", t, k)
        if max(nxt) >= max(t):
            raise DescentError(f"jump at {k} does not decrease {t}")
        recorded.append(k)
        t = nxt
    return tuple(reversed(recorded))


def _is_square(n: int) -> bool:
    return n > 0 and math.isqrt(n) ** 2 == n


def variant_descent_path(t: Sequence[int]) -> tuple[tuple[int, ...], list[Tuple]]:
    """Descend ``(a, b^2, c^2)`` to (1,1,1) with the tau maps.

    Returns the ascending word and the tau-tuples visited, from (1,1,1) up
    to ``(a, b^2, c^2)``.  Every visited tuple must have square second and
    third entries.
    """
    t = tuple(t)
    _check("variant", t)
    if not is_solution("variant", t):
        raise NotASolutionError(f"{t} does not solve the variant equation")
    a, b, c = t
    cur = (a, b * b, c * c)
    path = [cur]
    recorded = []
    while cur != (1, 1, 1):
        A, B, C = cur
        if A > B and A > C:
            k = 1
        else:
            k = 2 if B >= C else 3
        nxt = tau_mutate(cur, k)
        if max(nxt) >= max(cur):
            raise DescentError(f"tau_{k} does not decrease {cur}")
        if not (_is_square(nxt[1]) and _is_square(nxt[2])):
            raise DescentError(f"{nxt} leaves N x squares x squares")
        recorded.append(k)
        path.append(nxt)
        cur = nxt
    return tuple(reversed(recorded)), list(reversed(path))


def variant_descend(t: Sequence[int]) -> tuple[int, ...]:
    """Mutation word taking (1,1,1) to the variant solution ``t``.

    The descent runs on ``(a, b^2, c^2)`` with the tau maps; since
    ``tau_k(a, b^2, c^2) = (a', b'^2, c'^2)`` exactly when
    ``mu_k(a, b, c) = (a', b', c')``, the same word works for ``mu``.
    """
    return variant_descent_path(t)[0]


def descend(system: str, t: Sequence[int]) -> tuple[int, ...]:
    if system == "markov":
        return markov_descend(t)
    if system == "variant":
        return variant_descend(t)
    raise ValueError(f"no descent procedure for {system!r}")


# -- trees -----------------------------------------------------------------


@dataclass
class SolutionTree:
    """Solutions in BFS order with labelled edges ``(parent, child, k)`` by node index.

    For rank 4 the maps are not involutions, so each tree edge is stored
    together with its reverse edge carrying the inverse label.
    """

    system: str
    nodes: list[Tuple]
    edges: list[tuple[int, int, int]]

    @property
    def root(self) -> Tuple:
        return self.nodes[0]

    @property
    def directed(self) -> bool:
        return self.system == "rank4"

    def node_set(self) -> set[Tuple]:
        return set(self.nodes)

    def labelled_edges(self) -> set[tuple[Tuple, Tuple, int]]:
        return {(self.nodes[i], self.nodes[j], k) for i, j, k in self.edges}

    def depth_of(self) -> dict[Tuple, int]:
        depth = {self.nodes[0]: 0}
        for i, j, _ in self.edges:
            if self.nodes[j] not in depth:
                depth[self.nodes[j]] = depth[self.nodes[i]] + 1
        return depth


class _TreeBuilder:
    def __init__(self, system: str, root: Sequence[int]):
        root = tuple(root)
        _check(system, root)
        if not is_solution(system, root):
            raise NotASolutionError(f"root {root} is not on the level set of {system}")
        self.system = system
        self.nodes = [root]
        self.index = {root: 0}
        self.edges: list[tuple[int, int, int]] = []

    def expand(self, i: int) -> list[int]:
        parent = self.nodes[i]
        new = []
        for k in LABELS[self.system]:
            child = numeric_mutate(self.system, parent, k)
            if child in self.index:
                continue
            if not is_solution(self.system, child):
                raise AssertionError(f"{child} left the level set")
            j = len(self.nodes)
            self.nodes.append(child)
            self.index[child] = j
            self.edges.append((i, j, k))
            if self.system == "rank4":
                self.edges.append((j, i, RANK4_INVERSE[k]))
            new.append(j)
        return new

    def tree(self) -> SolutionTree:
        return SolutionTree(self.system, self.nodes, self.edges)


def enumerate_solutions(
    system: str, root: Sequence[int] | None = None, depth: int = 3, value_bound: int | None = None
) -> SolutionTree:
    """BFS tree of solutions up to ``depth`` jumps from ``root``.

    Children with an entry above ``value_bound`` are dropped; already seen
    tuples are not revisited.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    builder = _TreeBuilder(system, root if root is not None else fundamental(system))
    frontier = [0]
    for _ in range(depth):
        nxt = []
        for i in frontier:
            for j in builder.expand(i):
                if value_bound is not None and max(builder.nodes[j]) > value_bound:
                    continue
                nxt.append(j)
        frontier = nxt
    if value_bound is not None:
        return _prune(builder.tree(), value_bound)
    return builder.tree()


def _prune(tree: SolutionTree, bound: int) -> SolutionTree:
    keep = [i for i, t in enumerate(tree.nodes) if max(t) <= bound]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [(remap[i], remap[j], k) for i, j, k in tree.edges if i in remap and j in remap]
    return SolutionTree(tree.system, [tree.nodes[i] for i in keep], edges)


def grow_tree(system: str, expand: Sequence[Sequence[int]], root: Sequence[int] | None = None) -> SolutionTree:
    """Tree obtained by expanding exactly the listed nodes, in order.

    Each listed tuple must already be present when its turn comes; this
    reproduces hand-drawn partial trees.
    """
    builder = _TreeBuilder(system, root if root is not None else fundamental(system))
    for t in expand:
        t = tuple(t)
        if t not in builder.index:
            raise ValueError(f"{t} is not in the tree yet")
        builder.expand(builder.index[t])
    return builder.tree()


# -- closures and oracles --------------------------------------------------


def _height(system: str) -> Callable[[Tuple], int]:
    if system == "variant":
        # the tau-space maximum strictly drops along descents
        return lambda t: max(t[0], t[1] * t[1], t[2] * t[2])
    return max


def closure(system: str, bound: int, root: Sequence[int] | None = None) -> set[Tuple]:
    """All tuples reachable from ``root`` whose entries are at most ``bound``.

    BFS is pruned by a height that decreases along descent paths (the
    maximum for markov and rank4, ``max(a, b^2, c^2)`` for variant), so for
    markov and variant the result contains every solution below the bound.
    For rank4 the pruning is by plain maximum.
    """
    root = tuple(root) if root is not None else fundamental(system)
    height = _height(system)
    limit = bound * bound if system == "variant" else bound
    seen = {root}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for k in LABELS[system]:
            s = numeric_mutate(system, t, k)
            if s in seen or height(s) > limit:
                continue
            seen.add(s)
            queue.append(s)
    return {t for t in seen if max(t) <= bound}


def _quadratic_roots(a2: int, a1: int, a0: int) -> list[int]:
    """Positive integer roots of ``a2 x^2 + a1 x + a0``."""
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    s = math.isqrt(disc)
    if s * s != disc:
        return []
    roots = set()
    for num in (-a1 + s, -a1 - s):
        if num > 0 and num % (2 * a2) == 0:
            roots.add(num // (2 * a2))
    return sorted(roots)


def oracle_solutions(system: str, bound: int) -> set[Tuple]:
    """Every solution with all entries at most ``bound``, by brute force.

    Loops over all but one coordinate and solves the remaining quadratic
    with an integer square-root test on the discriminant.  Shares no code
    with the mutation maps.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    out: set[Tuple] = set()
    if system == "markov":
        for b in range(1, bound + 1):
            for c in range(1, bound + 1):
                for a in _quadratic_roots(1, -3 * b * c, b * b + c * c):
                    if a <= bound:
                        out.add((a, b, c))
    elif system == "variant":
        for b in range(1, bound + 1):
            b2 = b * b
            for c in range(1, b + 1):
                c2 = c * c
                for a in _quadratic_roots(1, 2 * b2 + 2 * c2 - 7 * b2 * c2, b2 * b2 + c2 * c2):
                    if a <= bound:
                        out.add((a, b, c))
                        out.add((a, c, b))
    elif system == "variant-tau":
        for B in range(1, bound + 1):
            for C in range(1, bound + 1):
                for A in _quadratic_roots(1, 2 * B + 2 * C - 7 * B * C, B * B + C * C):
                    if A <= bound:
                        out.add((A, B, C))
    elif system == "rank4":
        e = 1
        for b in range(1, bound + 1):
            for c in range(1, bound + 1):
                for d in range(1, bound + 1):
                    a2 = e * (c + d)
                    a1 = b * (e * e + d * d + c * c - 9 * c * d)
                    a0 = e * (c * d * d + b * b * c + b * b * d + c * c * d)
                    for a in _quadratic_roots(a2, a1, a0):
                        if a <= bound:
                            out.add((a, b, c, d, e))
    else:
        raise ValueError(f"unknown system {system!r}")
    # the quadratic solve is re-checked against the invariant itself
    assert all(is_solution(system, t) for t in out)
    return out


def homogeneous_rank4_oracle(bound: int) -> set[Tuple]:
    """Primitive solutions ``(a,b,c,d,e)`` of the rank-4 equation, entries <= bound."""
    out: set[Tuple] = set()
    for e in range(1, bound + 1):
        for b in range(1, bound + 1):
            for c in range(1, bound + 1):
                for d in range(1, bound + 1):
                    a2 = e * (c + d)
                    a1 = b * (e * e + d * d + c * c - 9 * c * d)
                    a0 = e * (c * d * d + b * b * c + b * b * d + c * c * d)
                    for a in _quadratic_roots(a2, a1, a0):
                        t = (a, b, c, d, e)
                        if a <= bound and math.gcd(*t) == 1:
                            out.add(t)
    return out


# -- uniqueness ------------------------------------------------------------


@dataclass
class Collision:
    a: int
    pairs: list[tuple[int, int]]


def uniqueness_scan(system: str, bound: int, oracle_cap: int = 2000) -> list[Collision]:
    """Largest entries ``a`` shared by solutions ``a >= b >= c`` with different ``(b, c)``.

    Solutions come from the descent-complete closure, joined with the
    brute-force oracle when ``bound`` is small enough to afford it.
    """
    if system not in ("markov", "variant"):
        raise ValueError("uniqueness scans exist for markov and variant")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    sols = closure(system, bound)
    if bound <= oracle_cap:
        sols |= oracle_solutions(system, bound)
    groups: dict[int, set[tuple[int, int]]] = {}
    for a, b, c in sols:
        if a >= b >= c:
            groups.setdefault(a, set()).add((b, c))
    return [Collision(a, sorted(p)) for a, p in sorted(groups.items()) if len(p) > 1]


# -- rank-4 reachability ---------------------------------------------------


def _multiset(t: Tuple, fixed_e: bool = True) -> Tuple:
    key = tuple(sorted(t[:4]))
    return key if fixed_e else key + (t[4],)


@dataclass
class SearchReport:
    value_bound: int
    oracle_set: set[Tuple]
    reachable_set: set[Tuple]
    unreachable_set: set[Tuple]
    notes: list[str] = field(default_factory=list)
    fixed_e: bool = True

    @property
    def counts(self) -> dict[str, int]:
        return {
            "oracle": len(self.oracle_set),
            "reachable": len(self.reachable_set),
            "unreachable": len(self.unreachable_set),
        }

    def multiset_view(self) -> dict[str, set[Tuple]]:
        oracle = {_multiset(t, self.fixed_e) for t in self.oracle_set}
        reach = {_multiset(t, self.fixed_e) for t in self.reachable_set}
        return {"oracle": oracle, "reachable": reach, "unreachable": oracle - reach}

    def to_dict(self) -> dict:
        def fmt(ts: Iterable[Tuple]) -> list[list[str]]:
            return [[str(x) for x in t] for t in sorted(ts)]

        mv = self.multiset_view()
        return {
            "bounds": {"value_bound": str(self.value_bound), "e": "1" if self.fixed_e else "free"},
            "counts": {k: str(v) for k, v in self.counts.items()},
            "exact": {
                "oracle": fmt(self.oracle_set),
                "reachable": fmt(self.reachable_set),
                "unreachable": fmt(self.unreachable_set),
            },
            "multiset": {
                "counts": {k: str(len(v)) for k, v in mv.items()},
                "oracle": fmt(mv["oracle"]),
                "reachable": fmt(mv["reachable"]),
                "unreachable": fmt(mv["unreachable"]),
            },
            "notes": self.notes,
        }


def rank4_reachability(value_bound: int) -> SearchReport:
    if value_bound < 1:
        raise ValueError("value_bound must be at least 1")
    reach = {t for t in closure("rank4", value_bound) if t[4] == 1}
    oracle = oracle_solutions("rank4", value_bound)
    return SearchReport(
        value_bound,
        oracle,
        reach,
        oracle - reach,
        notes=[
            "reachable: BFS from (1,1,1,1,1) under mu_1..mu_4, pruned when an entry exceeds the bound",
            "multiset view compares sorted (a,b,c,d) to ignore relabelings",
        ],
    )


# -- twists and Vieta functions on rational 5-tuples ------------------------

GENERATORS = ("v1", "v2", "v3", "v4", "t1", "t2", "mu1", "mu2", "mu3", "mu4")


def g_apply(gen: str, t: Sequence) -> tuple:
    """Apply a twist, Vieta function or rank-4 mutation map to a rational 5-tuple.

    Works for any field-like entries (Fraction, or RationalFn for symbolic use).
    """
    a, b, c, d, e = t
    if gen == "t1":
        return (b, a, c, d, e)
    if gen == "t2":
        return (a, b, d, c, e)
    if gen == "v1":
        return ((b * b + c * d) / a, b, c, d, e)
    if gen == "v2":
        return (a, (a * a + c * d) / b, c, d, e)
    if gen == "v3":
        return (a, b, (a * b * (d * d + e * e) + d * e * (a * a + b * b)) / (c * (a * b + d * e)), d, e)
    if gen == "v4":
        return (a, b, c, (a * b * (c * c + e * e) + c * e * (a * a + b * b)) / (d * (a * b + c * e)), e)
    if gen == "mu1":
        return (b, (b * b + c * d) / a, c, d, e)
    if gen == "mu2":
        return ((a * a + c * d) / b, a, c, d, e)
    if gen == "mu3":
        return (d, a, b, (a * e + b * d) / c, e)
    if gen == "mu4":
        return (b, c, (a * c + b * e) / d, a, e)
    raise ValueError(f"unknown generator {gen!r}")


def g_rescale(t: Sequence) -> Tuple:
    """Scale a positive rational tuple to the primitive integer tuple on its ray."""
    fr = [Fraction(x) for x in t]
    if any(x <= 0 for x in fr):
        raise ValueError("entries must be positive")
    lcm = math.lcm(*(x.denominator for x in fr))
    ints = [int(x * lcm) for x in fr]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def compose(word: Sequence[str], t: Sequence) -> tuple:
    """Apply a product written left to right, e.g. ``["v1", "t1"]`` is ``v1 o t1``."""
    for gen in reversed(word):
        t = g_apply(gen, t)
    return tuple(t)


# each relation lists products that must coincide as maps
RELATIONS: dict[str, list[list[str]]] = {
    "v1t1=t1v2=mu2": [["v1", "t1"], ["t1", "v2"], ["mu2"]],
    "v1t2=t2v1": [["v1", "t2"], ["t2", "v1"]],
    "v2t1=t1v1=mu1": [["v2", "t1"], ["t1", "v1"], ["mu1"]],
    "v2t2=t2v2": [["v2", "t2"], ["t2", "v2"]],
    "v3t1=t1v3": [["v3", "t1"], ["t1", "v3"]],
    "v3t2=t2v4": [["v3", "t2"], ["t2", "v4"]],
    "v4t1=t1v4": [["v4", "t1"], ["t1", "v4"]],
    "v4t2=t2v3": [["v4", "t2"], ["t2", "v3"]],
    "t2t1mu3=mu4t1t2": [["t2", "t1", "mu3"], ["mu4", "t1", "t2"]],
}


@dataclass
class RelationReport:
    symbolic: dict[str, bool]
    numeric: dict[str, bool]
    invariance: dict[str, bool]
    trials: int

    @property
    def passed(self) -> bool:
        return all(self.symbolic.values()) and all(self.numeric.values()) and all(self.invariance.values())

    def to_dict(self) -> dict:
        return {
            "trials": str(self.trials),
            "symbolic": self.symbolic,
            "numeric": self.numeric,
            "invariance": self.invariance,
            "passed": self.passed,
        }


def _random_point(rng: random.Random) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(5))


def verify_group_relations(trials: int = 100, rng_seed: int = 0) -> RelationReport:
    """Check the relation table symbolically and at random positive rational points."""
    from .laurent import LaurentPoly, RationalFn, fraction_equal

    if trials < 1:
        raise ValueError("trials must be positive")
    xs = tuple(RationalFn(g) for g in LaurentPoly.gens(5))

    def sym_equal(p: tuple, q: tuple) -> bool:
        return all(fraction_equal(RationalFn.lift(x, 5), RationalFn.lift(y, 5)) for x, y in zip(p, q))

    symbolic = {}
    for name, products in RELATIONS.items():
        images = [compose(w, xs) for w in products]
        symbolic[name] = all(sym_equal(images[0], im) for im in images[1:])

    rng = random.Random(rng_seed)
    points = [(Fraction(1),) * 5] + [_random_point(rng) for _ in range(trials)]
    numeric = {}
    for name, products in RELATIONS.items():
        numeric[name] = all(
            len({compose(w, p) for w in products}) == 1 for p in points
        )

    invariance = {}
    for gen in ("v1", "v2", "v3", "v4", "t1", "t2"):
        invariance[gen] = all(
            eval_invariant("rank4", g_apply(gen, p)) == eval_invariant("rank4", p) for p in points
        )
    return RelationReport(symbolic, numeric, invariance, trials)


GROUP_GENERATORS = ("v1", "v3", "mu3", "mu4", "t1", "t2")


def group_orbit(bound: int) -> SearchReport:
    """Primitive integer tuples reached from (1,1,1,1,1) by the group and rescaling.

    After each generator the image is rescaled to a primitive integer tuple;
    tuples with an entry above ``bound`` are not expanded.  This is one
    concrete reading of rescaling rational entries, recorded in the notes.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    start = (1, 1, 1, 1, 1)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        ft = tuple(Fraction(x) for x in t)
        for gen in GROUP_GENERATORS:
            s = g_rescale(g_apply(gen, ft))
            if s in seen or max(s) > bound:
                continue
            seen.add(s)
            queue.append(s)
    oracle = homogeneous_rank4_oracle(bound)
    return SearchReport(
        bound,
        oracle,
        seen,
        oracle - seen,
        notes=[
            "rescaling reading: after every generator, scale to the primitive integer tuple",
            "generators: v1, v3, mu3, mu4 (= mu3^-1), t1, t2; oracle: primitive solutions, all entries <= bound",
        ],
        fixed_e=False,
    )
