"""Skew-symmetrizable exchange matrices, quivers, mutation and gradings.

Indices are 1-based throughout, matching the usual labelling of quiver
vertices; ``entries[i-1][j-1]`` is ``b_ij``.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rows = tuple[tuple[int, ...], ...]


class MatrixError(ValueError):
    """Invalid exchange-matrix data."""


class MutationIndexError(IndexError):
    pass


def _as_rows(rows: Sequence[Sequence[int]]) -> Rows:
    out = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(out)
    if any(len(r) != n for r in out):
        raise MatrixError(f"matrix is not square: row lengths {[len(r) for r in out]}")
    return out


def find_skew_symmetrizer(rows: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Minimal positive integer diagonal ``D`` with ``D B`` skew-symmetric.

    ``d_i b_ij = -d_j b_ji`` pins the ratio ``d_j / d_i`` along every
    nonzero entry, so ``D`` is propagated over each connected component
    of the sign pattern and then scaled to coprime integers.  Returns
    ``None`` when no positive solution exists.
    """
    b = _as_rows(rows)
    n = len(b)
    for i in range(n):
        if b[i][i]:
            raise MatrixError(f"nonzero diagonal entry b_{i+1}{i+1}={b[i][i]}")
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if b[i][j] == 0 and b[j][i] == 0:
                    continue
                # b_ij and b_ji must be nonzero together and of opposite sign
                if b[i][j] == 0 or b[j][i] == 0 or (b[i][j] > 0) == (b[j][i] > 0):
                    return None
                dj = -d[i] * b[i][j] / b[j][i]
                if d[j] is None:
                    d[j] = dj
                    comp.append(j)
                    queue.append(j)
                elif d[j] != dj:
                    return None
        lcm = math.lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * lcm) for i in comp]
        g = math.gcd(*ints)
        for i, v in zip(comp, ints):
            d[i] = Fraction(v // g)
    return tuple(int(x) for x in d)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Integer matrix ``B`` together with its set of mutable indices."""

    rows: Rows
    mutable: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        rows = _as_rows(self.rows)
        n = len(rows)
        if n == 0:
            raise MatrixError("empty matrix")
        mutable = frozenset(range(1, n + 1)) if self.mutable is None else frozenset(self.mutable)
        if not mutable:
            raise MatrixError("mutable set must be nonempty")
        if not mutable <= set(range(1, n + 1)):
            raise MatrixError(f"mutable indices {sorted(mutable)} out of range 1..{n}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "mutable", mutable)
        if find_skew_symmetrizer(rows) is None:
            raise MatrixError("matrix is not skew-symmetrizable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def frozen(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.mutable

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def column(self, k: int) -> tuple[int, ...]:
        return tuple(r[k - 1] for r in self.rows)

    def __neg__(self) -> ExchangeMatrix:
        return ExchangeMatrix(tuple(tuple(-x for x in r) for r in self.rows), self.mutable)

    def skew_symmetrizer(self) -> tuple[int, ...]:
        return find_skew_symmetrizer(self.rows)  # type: ignore[return-value]

    def is_skew_symmetric(self) -> bool:
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(self.n) for j in range(self.n))

    def permute(self, sigma: Sequence[int]) -> ExchangeMatrix:
        """The matrix ``C`` with ``c_ij = b_{sigma(i), sigma(j)}``.

        ``sigma`` is given as the tuple ``(sigma(1), ..., sigma(n))``.
        """
        s = [x - 1 for x in sigma]
        rows = tuple(tuple(self.rows[s[i]][s[j]] for j in range(self.n)) for i in range(self.n))
        inv = {v: i + 1 for i, v in enumerate(sigma)}
        return ExchangeMatrix(rows, frozenset(inv[k] for k in self.mutable))

    def to_dict(self) -> dict:
        return {"n": self.n, "mutable": sorted(self.mutable), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, doc: dict) -> ExchangeMatrix:
        for key in ("n", "rows"):
            if key not in doc:
                raise MatrixError(f"missing field {key!r}")
        n = doc["n"]
        if not isinstance(n, int) or n < 1:
            raise MatrixError(f"field 'n' must be a positive integer, got {n!r}")
        rows = doc["rows"]
        if not isinstance(rows, list) or len(rows) != n:
            raise MatrixError(f"field 'rows' must hold {n} rows")
        for idx, r in enumerate(rows, start=1):
            if not isinstance(r, list) or len(r) != n or not all(isinstance(x, int) for x in r):
                raise MatrixError(f"rows[{idx}] must be a list of {n} integers")
        mutable = doc.get("mutable", list(range(1, n + 1)))
        if not isinstance(mutable, list) or not all(isinstance(x, int) for x in mutable):
            raise MatrixError("field 'mutable' must be a list of integers")
        return cls(tuple(tuple(r) for r in rows), frozenset(mutable))


def mutate_matrix(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at the mutable index ``k``."""
    if not 1 <= k <= b.n:
        raise MutationIndexError(f"index {k} out of range 1..{b.n}")
    if k not in b.mutable:
        raise MutationIndexError(f"index {k} is frozen")
    r = b.rows
    kk = k - 1
    new = []
    for i in range(b.n):
        row = []
        for j in range(b.n):
            if kk in (i, j):
                row.append(-r[i][j])
            else:
                bik, bkj = r[i][kk], r[kk][j]
                row.append(r[i][j] + (bik * abs(bkj) + abs(bik) * bkj) // 2)
        new.append(tuple(row))
    return ExchangeMatrix(tuple(new), b.mutable)


def _admissible_perms(n: int, source_mutable: frozenset[int], target_mutable: frozenset[int]):
    """Permutations sigma, lexicographic, with sigma(i) mutable in source iff i mutable in target."""
    for sigma in itertools.permutations(range(1, n + 1)):
        if all((sigma[i - 1] in source_mutable) == (i in target_mutable) for i in range(1, n + 1)):
            yield sigma


def find_isomorphism(b: ExchangeMatrix, c: ExchangeMatrix) -> tuple[int, ...] | None:
    """Lexicographically least ``sigma`` with ``c_ij = b_{sigma(i), sigma(j)}``.

    Only permutations that carry mutable indices of ``c`` onto mutable
    indices of ``b`` are considered.
    """
    if b.n != c.n or len(b.mutable) != len(c.mutable):
        raise MatrixError("matrices differ in size or number of mutable indices")
    if sorted(x for r in b.rows for x in r) != sorted(x for r in c.rows for x in r):
        return None
    for sigma in _admissible_perms(b.n, b.mutable, c.mutable):
        s = [x - 1 for x in sigma]
        if all(c.rows[i][j] == b.rows[s[i]][s[j]] for i in range(b.n) for j in range(b.n)):
            return sigma
    return None


def canonical_form(b: ExchangeMatrix) -> tuple:
    """Isomorphism-invariant key: mutable indices first, then least row-major entries."""
    n, m = b.n, len(b.mutable)
    target = frozenset(range(1, m + 1))
    best = min(
        tuple(b.rows[s - 1][t - 1] for s in sigma for t in sigma)
        for sigma in _admissible_perms(n, b.mutable, target)
    )
    return (n, m, best)


def canonical_matrix(b: ExchangeMatrix) -> ExchangeMatrix:
    n, m, flat = canonical_form(b)
    rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
    return ExchangeMatrix(rows, frozenset(range(1, m + 1)))


@dataclass
class MutationClass:
    raw_class: set[ExchangeMatrix]
    iso_classes: set[ExchangeMatrix]
    finite: bool


def mutation_class(b: ExchangeMatrix, limit: int = 1000) -> MutationClass:
    """Breadth-first closure of ``b`` under mutation at every mutable index.

    Stops with ``finite=False`` once more than ``limit`` isomorphism
    classes have been seen.
    """
    if limit < 1:
        raise ValueError("limit must be a positive integer")
    raw = {b}
    iso = {canonical_form(b): canonical_matrix(b)}
    queue = deque([b])
    while queue:
        cur = queue.popleft()
        for k in sorted(cur.mutable):
            nxt = mutate_matrix(cur, k)
            if nxt in raw:
                continue
            raw.add(nxt)
            key = canonical_form(nxt)
            if key not in iso:
                iso[key] = canonical_matrix(nxt)
                if len(iso) > limit:
                    return MutationClass(raw, set(iso.values()), False)
            queue.append(nxt)
    return MutationClass(raw, set(iso.values()), True)


# -- quivers ---------------------------------------------------------------


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """Vertices ``(id, frozen)`` in matrix order and a multiset of arrows."""

    vertices: tuple[tuple[object, bool], ...]
    arrows: tuple[tuple[object, object], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((v, bool(f)) for v, f in self.vertices))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise QuiverError("duplicate vertex ids")
        known = set(ids)
        for s, t in self.arrows:
            if s not in known or t not in known:
                raise QuiverError(f"arrow {s}->{t} uses an unknown vertex")


def quiver_to_matrix(q: Quiver) -> ExchangeMatrix:
    """Signed adjacency matrix; opposite arrows cancel."""
    index = {v: i for i, (v, _) in enumerate(q.vertices)}
    n = len(index)
    b = [[0] * n for _ in range(n)]
    for s, t in q.arrows:
        if s == t:
            raise QuiverError(f"loop at vertex {s}")
        b[index[s]][index[t]] += 1
        b[index[t]][index[s]] -= 1
    mutable = frozenset(i + 1 for i, (_, fr) in enumerate(q.vertices) if not fr)
    return ExchangeMatrix(tuple(tuple(r) for r in b), mutable)


def matrix_to_quiver(b: ExchangeMatrix) -> Quiver:
    """Quiver with vertices ``1..n``; only defined for skew-symmetric matrices."""
    if not b.is_skew_symmetric():
        raise QuiverError("only skew-symmetric matrices are signed adjacency matrices")
    arrows = []
    for i in range(1, b.n + 1):
        for j in range(1, b.n + 1):
            arrows.extend([(i, j)] * max(0, b[i, j]))
    vertices = tuple((i, i not in b.mutable) for i in range(1, b.n + 1))
    return Quiver(vertices, tuple(arrows))


# -- gradings --------------------------------------------------------------


def _rref_nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    m = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def _primitive(v: Iterable[Fraction]) -> tuple[int, ...]:
    v = list(v)
    lcm = math.lcm(*(x.denominator for x in v))
    ints = [int(x * lcm) for x in v]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return tuple(-x for x in ints) if lead < 0 else tuple(ints)


def grading_vectors(b: ExchangeMatrix) -> list[tuple[int, ...]]:
    """Primitive integer basis of ``{v : v^T B e_k = 0 for every mutable k}``.

    Built from the reduced row echelon form of the transposed mutable
    columns, one vector per free coordinate, so the order is fixed.
    """
    cols = [[Fraction(x) for x in b.column(k)] for k in sorted(b.mutable)]
    return [_primitive(v) for v in _rref_nullspace(cols, b.n)]


def is_grading(b: ExchangeMatrix, v: Sequence[int]) -> bool:
    return all(sum(vi * bi for vi, bi in zip(v, b.column(k))) == 0 for k in b.mutable)
