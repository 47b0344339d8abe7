"""Initial data: the exchange matrices and quivers studied throughout."""

from __future__ import annotations

from .exmat import ExchangeMatrix, Quiver, quiver_to_matrix

# torus with one puncture: two arrows 1=>2, 2=>3, 3=>1
MARKOV_QUIVER = Quiver(
    vertices=((1, False), (2, False), (3, False)),
    arrows=((1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)),
)

VARIANT_ROWS = ((0, 1, -1), (-4, 0, 2), (4, -2, 0))

_RANK4_ARROWS = (
    (2, 1), (2, 1),
    (3, 2), (4, 2), (3, 4),
    (1, 3), (1, 4),
)

# torus minus a disk, one marked point on the boundary; vertex 5 is the boundary arc
RANK4_QUIVER = Quiver(
    vertices=((1, False), (2, False), (3, False), (4, False), (5, True)),
    arrows=_RANK4_ARROWS + ((4, 5), (5, 3)),
)

RANK4_NOFROZEN_QUIVER = Quiver(
    vertices=((1, False), (2, False), (3, False), (4, False)),
    arrows=_RANK4_ARROWS,
)

A3_QUIVER = Quiver(vertices=((1, False), (2, False), (3, False)), arrows=((1, 2), (2, 3)))

# vertex relabelings mu_k(Q) ~ Q for the rank-4 quiver: position j of the
# relabelled cluster holds the variable sitting at vertex RELABEL[k][j-1]
RANK4_RELABEL = {
    1: (2, 1, 3, 4, 5),
    2: (2, 1, 3, 4, 5),
    3: (4, 1, 2, 3, 5),
    4: (2, 3, 4, 1, 5),
}


def markov_matrix() -> ExchangeMatrix:
    return quiver_to_matrix(MARKOV_QUIVER)


def variant_matrix() -> ExchangeMatrix:
    return ExchangeMatrix(VARIANT_ROWS)


def rank4_matrix() -> ExchangeMatrix:
    return quiver_to_matrix(RANK4_QUIVER)


def rank4_nofrozen_matrix() -> ExchangeMatrix:
    return quiver_to_matrix(RANK4_NOFROZEN_QUIVER)


def a3_matrix() -> ExchangeMatrix:
    return quiver_to_matrix(A3_QUIVER)


FIXTURES = {
    "markov": markov_matrix,
    "variant": variant_matrix,
    "rank4": rank4_matrix,
    "rank4-nofrozen": rank4_nofrozen_matrix,
    "a3-hexagon": a3_matrix,
}

SYSTEM_MATRIX = {"markov": markov_matrix, "variant": variant_matrix, "rank4": rank4_matrix}
