"""Golden node and edge sets for the three reference solution trees.

Edges are ``(u, v, label)``.  The Markov and variant trees are drawn with
two-headed arrows, so their edges are unordered; the rank-4 tree has one
arrow each way and omits the frozen entry e = 1, which is appended here.
"""

MARKOV_NODES = {
    (1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2),
    (5, 2, 1), (5, 1, 2), (1, 2, 5), (1, 5, 2), (2, 5, 1), (2, 1, 5),
    (13, 5, 1), (2, 5, 29), (13, 1, 5), (2, 29, 5),
}

MARKOV_EDGES = {
    ((1, 1, 1), (2, 1, 1), 1),
    ((1, 1, 1), (1, 2, 1), 2),
    ((1, 1, 1), (1, 1, 2), 3),
    ((5, 2, 1), (1, 2, 1), 1),
    ((5, 1, 2), (1, 1, 2), 1),
    ((1, 2, 5), (1, 2, 1), 3),
    ((1, 5, 2), (1, 1, 2), 2),
    ((2, 5, 1), (2, 1, 1), 2),
    ((2, 1, 5), (2, 1, 1), 3),
    ((13, 5, 1), (2, 5, 1), 1),
    ((2, 5, 29), (2, 5, 1), 3),
    ((13, 1, 5), (2, 1, 5), 1),
    ((2, 29, 5), (2, 1, 5), 2),
}

# nodes the drawing expands, in breadth-first order
MARKOV_EXPANDED = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 5, 1), (2, 1, 5)]

VARIANT_NODES = {
    (1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2),
    (17, 2, 1), (17, 1, 2), (1, 2, 5), (1, 5, 2), (2, 3, 1), (2, 1, 3),
    (41, 3, 1), (2, 3, 11), (41, 1, 3), (2, 11, 3),
}

VARIANT_EDGES = {
    ((1, 1, 1), (2, 1, 1), 1),
    ((1, 1, 1), (1, 2, 1), 2),
    ((1, 1, 1), (1, 1, 2), 3),
    ((17, 2, 1), (1, 2, 1), 1),
    ((17, 1, 2), (1, 1, 2), 1),
    ((1, 2, 5), (1, 2, 1), 3),
    ((1, 5, 2), (1, 1, 2), 2),
    ((2, 3, 1), (2, 1, 1), 2),
    ((2, 1, 3), (2, 1, 1), 3),
    ((41, 3, 1), (2, 3, 1), 1),
    ((2, 3, 11), (2, 3, 1), 3),
    ((41, 1, 3), (2, 1, 3), 1),
    ((2, 11, 3), (2, 1, 3), 2),
}

VARIANT_EXPANDED = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 3, 1), (2, 1, 3)]


def _e(t):
    return tuple(t) + (1,)


_R4 = {
    1: (1, 1, 1, 1), 2: (2, 1, 1, 1), 3: (1, 2, 1, 1), 4: (1, 1, 2, 1), 5: (1, 1, 1, 2),
    6: (1, 2, 1, 3), 7: (1, 1, 3, 2), 8: (5, 2, 1, 1), 9: (1, 3, 2, 1), 10: (3, 1, 2, 1),
    11: (1, 2, 3, 1), 12: (13, 5, 1, 1), 13: (1, 5, 2, 7), 14: (2, 1, 7, 5),
}

_R4_ARROWS = [
    (1, 2, 2), (2, 1, 1), (1, 3, 1), (3, 1, 2), (1, 4, 4), (4, 1, 3), (1, 5, 3), (5, 1, 4),
    (2, 6, 3), (6, 2, 4), (2, 7, 4), (7, 2, 3), (2, 8, 2), (8, 2, 1),
    (9, 4, 2), (4, 9, 1), (10, 4, 1), (4, 10, 2), (11, 4, 3), (4, 11, 4),
    (8, 12, 2), (12, 8, 1), (8, 13, 3), (13, 8, 4), (8, 14, 4), (14, 8, 3),
]

RANK4_NODES = {_e(t) for t in _R4.values()}
RANK4_EDGES = {(_e(_R4[u]), _e(_R4[v]), k) for u, v, k in _R4_ARROWS}
RANK4_EXPANDED = [_e(_R4[1]), _e(_R4[2]), _e(_R4[4]), _e(_R4[8])]


def undirected(edges):
    return {(frozenset((u, v)), k) for u, v, k in edges}
