"""Seeds with cluster variables expressed in the initial cluster.

Every cluster variable is stored as a :class:`LaurentPoly` in the initial
variables.  A mutation computes the exchange binomial and divides it by the
outgoing variable with :func:`exact_div`; failure of that division would
contradict the Laurent phenomenon and is raised as an error.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exmat import ExchangeMatrix, MutationIndexError, mutate_matrix
from .fixtures import RANK4_RELABEL, SYSTEM_MATRIX
from .laurent import LaurentPoly, RationalFn, exact_div, fraction_equal, render, substitute, weighted_degree

SYSTEMS = ("markov", "variant", "rank4")


class LaurentViolation(ArithmeticError):
    """An exchange relation did not produce a Laurent polynomial."""


@dataclass(frozen=True)
class Seed:
    matrix: ExchangeMatrix
    vars: tuple[LaurentPoly, ...]
    history: tuple[int, ...] = ()

    @property
    def n(self) -> int:
        return self.matrix.n

    def cluster_key(self) -> tuple[LaurentPoly, ...]:
        """The cluster as an unordered multiset (sorted by rendering)."""
        return tuple(sorted((self.vars[k - 1] for k in sorted(self.matrix.mutable)), key=render))

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_dict(),
            "history": list(self.history),
            "vars": [render(v) for v in self.vars],
        }


def initial_seed(b: ExchangeMatrix) -> Seed:
    return Seed(b, LaurentPoly.gens(b.n))


def exchange_binomial(s: Seed, k: int) -> LaurentPoly:
    """Sum of the two monomials in the exchange relation at ``k``."""
    n = s.n
    pos = LaurentPoly.constant(1, n)
    neg = LaurentPoly.constant(1, n)
    for i, bik in enumerate(s.matrix.column(k)):
        if bik > 0:
            pos = pos * s.vars[i] ** bik
        elif bik < 0:
            neg = neg * s.vars[i] ** -bik
    return pos + neg


def mutate_seed(s: Seed, k: int) -> Seed:
    if k not in s.matrix.mutable:
        raise MutationIndexError(f"index {k} is not mutable")
    binom = exchange_binomial(s, k)
    new = exact_div(binom, s.vars[k - 1])
    if new is None:
        raise LaurentViolation(f"exchange at {k} after word {s.history} is not Laurent")
    vars_ = list(s.vars)
    vars_[k - 1] = new
    return Seed(mutate_matrix(s.matrix, k), tuple(vars_), s.history + (k,))


def apply_word(s: Seed, word: Iterable[int]) -> Seed:
    for k in word:
        s = mutate_seed(s, k)
    return s


def reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    """Cancel adjacent repeated letters (mutation is an involution)."""
    out: list[int] = []
    for k in word:
        if out and out[-1] == k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


@dataclass
class ExchangeGraph:
    clusters: set[tuple[LaurentPoly, ...]]
    variables: set[LaurentPoly]
    complete: bool
    seeds: list[Seed] = field(default_factory=list)


def enumerate_exchange_graph(s: Seed, max_seeds: int = 1000) -> ExchangeGraph:
    """BFS over seeds, identifying seeds with the same unordered cluster."""
    if max_seeds < 1:
        raise ValueError("max_seeds must be positive")
    seen = {s.cluster_key(): s}
    variables = {s.vars[k - 1] for k in s.matrix.mutable}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for k in sorted(cur.matrix.mutable):
            nxt = mutate_seed(cur, k)
            key = nxt.cluster_key()
            if key in seen:
                continue
            if len(seen) >= max_seeds:
                return ExchangeGraph(set(seen), variables, False, list(seen.values()))
            seen[key] = nxt
            variables.add(nxt.vars[k - 1])
            queue.append(nxt)
    return ExchangeGraph(set(seen), variables, True, list(seen.values()))


# -- invariants -------------------------------------------------------------


def _gens(system: str) -> tuple[LaurentPoly, ...]:
    return LaurentPoly.gens(5 if system == "rank4" else 3)


def build_invariant(system: str) -> RationalFn:
    if system == "markov":
        a, b, c = _gens(system)
        return RationalFn(a**2 + b**2 + c**2, a * b * c)
    if system == "variant":
        a, b, c = _gens(system)
        return RationalFn(a**2 + b**4 + c**4 + 2 * a * b**2 + 2 * a * c**2, a * b**2 * c**2)
    if system == "rank4":
        u1, u2, u3, u4, u5 = _gens(system)
        num = (
            u1 * u2 * u5**2 + u1**2 * u4 * u5 + u3 * u4**2 * u5
            + u2**2 * u3 * u5 + u1 * u2 * u4**2 + u2**2 * u4 * u5
            + u1 * u2 * u3**2 + u1**2 * u3 * u5 + u3**2 * u4 * u5
        )
        return RationalFn(num, u1 * u2 * u3 * u4)
    raise ValueError(f"unknown system {system!r}")


def mutation_maps(system: str) -> dict[int, tuple[RationalFn, ...]]:
    """The mutation maps as tuples of rational functions in the initial variables.

    For rank 4 these are the composites of a mutation with the vertex
    relabeling that brings the quiver back to its initial form.
    """
    if system == "markov":
        a, b, c = _gens(system)
        return {
            1: ((b**2 + c**2) / a, b / 1, c / 1),
            2: (a / 1, (c**2 + a**2) / b, c / 1),
            3: (a / 1, b / 1, (a**2 + b**2) / c),
        }
    if system == "variant":
        a, b, c = _gens(system)
        return {
            1: ((b**4 + c**4) / a, b / 1, c / 1),
            2: (a / 1, (a + c**2) / b, c / 1),
            3: (a / 1, b / 1, (a + b**2) / c),
        }
    if system == "rank4":
        a, b, c, d, e = (RationalFn(g) for g in _gens(system))
        return {
            1: (b, (b**2 + c * d) / a, c, d, e),
            2: ((a**2 + c * d) / b, a, c, d, e),
            3: (d, a, b, (a * e + b * d) / c, e),
            4: (b, c, (a * c + b * e) / d, a, e),
        }
    raise ValueError(f"unknown system {system!r}")


def seed_mutation_map(system: str, k: int) -> tuple[RationalFn, ...]:
    """Raw seed mutation at ``k`` (relabelled for rank 4), derived from the matrix."""
    s = apply_word(initial_seed(SYSTEM_MATRIX[system]()), [k])
    images = [RationalFn(v) for v in s.vars]
    if system == "rank4":
        images = [images[j - 1] for j in RANK4_RELABEL[k]]
    return tuple(images)


@dataclass
class InvarianceReport:
    system: str
    results: dict[int, bool]
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "results": {str(k): v for k, v in self.results.items()},
            "passed": self.passed,
            "notes": self.notes,
        }


def verify_invariance(system: str) -> InvarianceReport:
    """Check ``T o mu_i == T`` as an exact polynomial identity for every map."""
    t = build_invariant(system)
    results = {k: fraction_equal(substitute(t, images), t) for k, images in mutation_maps(system).items()}
    notes = []
    if system == "rank4":
        notes.append(
            "invariance is claimed for i in 1..5 but only four maps mu_1..mu_4 are defined; "
            "checked i in 1..4"
        )
    return InvarianceReport(system, results, notes)


# -- audits ---------------------------------------------------------------


@dataclass
class AuditReport:
    word: tuple[int, ...]
    degrees: list[int | None]
    laurent: list[bool]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "word": list(self.word),
            "degrees": self.degrees,
            "laurent": self.laurent,
            "failures": self.failures,
            "ok": self.ok,
        }


def audit_seed(s: Seed, v: Sequence[int], allowed_degrees: Iterable[int] | None = None) -> AuditReport:
    """Check every cluster variable is a Laurent polynomial homogeneous for ``v``."""
    allowed = None if allowed_degrees is None else set(allowed_degrees)
    degrees: list[int | None] = []
    laurent: list[bool] = []
    failures = []
    for i, x in enumerate(s.vars, start=1):
        is_laurent = isinstance(x, LaurentPoly) and not x.is_zero()
        laurent.append(is_laurent)
        if not is_laurent:
            failures.append(f"x{i} is not a nonzero Laurent polynomial")
            degrees.append(None)
            continue
        deg = weighted_degree(x, v)
        degrees.append(deg)
        if deg is None:
            failures.append(f"x{i} is not homogeneous")
        elif allowed is not None and deg not in allowed:
            failures.append(f"x{i} has degree {deg}, allowed {sorted(allowed)}")
        if i in s.matrix.frozen and x != LaurentPoly.var(i, s.n):
            failures.append(f"frozen variable x{i} changed")
    return AuditReport(s.history, degrees, laurent, failures)


def exchange_degrees(s: Seed, v: Sequence[int]) -> dict[int, int | None]:
    return {k: weighted_degree(exchange_binomial(s, k), v) for k in sorted(s.matrix.mutable)}


ALLOWED_DEGREES = {"markov": {1}, "variant": {1, 2}, "rank4": {1}}
SYSTEM_GRADING = {"markov": (1, 1, 1), "variant": (2, 1, 1), "rank4": (1, 1, 1, 1, 1)}


class SeedCache:
    """Memoised seeds keyed by reduced mutation word."""

    def __init__(self, root: Seed):
        self.root = root
        self._cache: dict[tuple[int, ...], Seed] = {(): root}

    def get(self, word: Sequence[int]) -> Seed:
        word = reduce_word(word)
        if word in self._cache:
            return self._cache[word]
        seed = mutate_seed(self.get(word[:-1]), word[-1])
        # keep history equal to the reduced word so replay is exact
        self._cache[word] = seed
        return seed


def random_audit(system: str, trials: int = 1000, max_len: int = 8, rng_seed: int = 0) -> list[AuditReport]:
    """Audit seeds reached by random words of length at most ``max_len``."""
    b = SYSTEM_MATRIX[system]()
    cache = SeedCache(initial_seed(b))
    rng = random.Random(rng_seed)
    mutable = sorted(b.mutable)
    v = SYSTEM_GRADING[system]
    reports = []
    for _ in range(trials):
        word = [rng.choice(mutable) for _ in range(rng.randint(0, max_len))]
        s = cache.get(word)
        reports.append(audit_seed(s, v, ALLOWED_DEGREES[system]))
    return reports
