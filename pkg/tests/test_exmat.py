import itertools
import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from clustervieta.exmat import (
    ExchangeMatrix,
    MatrixError,
    MutationIndexError,
    Quiver,
    QuiverError,
    canonical_form,
    find_isomorphism,
    find_skew_symmetrizer,
    grading_vectors,
    is_grading,
    matrix_to_quiver,
    mutate_matrix,
    mutation_class,
    quiver_to_matrix,
)
from clustervieta.fixtures import (
    FIXTURES,
    RANK4_RELABEL,
    a3_matrix,
    markov_matrix,
    rank4_matrix,
    rank4_nofrozen_matrix,
    variant_matrix,
)

MARKOV = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
VARIANT = ((0, 1, -1), (-4, 0, 2), (4, -2, 0))


@st.composite
def symmetrizable(draw, max_n=4):
    """B = S * diag(c) with S skew-symmetric, so diag(c) B is skew-symmetric."""
    n = draw(st.integers(1, max_n))
    c = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-2, 2))
            s[i][j], s[j][i] = v, -v
    rows = tuple(tuple(s[i][j] * c[j] for j in range(n)) for i in range(n))
    mutable = draw(st.sets(st.integers(1, n), min_size=1))
    return ExchangeMatrix(rows, mutable)


def quiver_rule_mutation(rows, k):
    # independent oracle: b'_ij = b_ij + sgn(b_ik) * b_ik * b_kj when b_ik b_kj > 0
    k -= 1
    n = len(rows)
    out = [list(r) for r in rows]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i][j] = -rows[i][j]
            elif rows[i][k] * rows[k][j] > 0:
                sign = 1 if rows[i][k] > 0 else -1
                out[i][j] = rows[i][j] + sign * rows[i][k] * rows[k][j]
    return tuple(tuple(r) for r in out)


def brute_symmetrizer(rows, cap=8):
    n = len(rows)
    for d in itertools.product(range(1, cap + 1), repeat=n):
        if math.gcd(*d) != 1:
            continue
        if all(d[i] * rows[i][j] == -d[j] * rows[j][i] for i in range(n) for j in range(n)):
            return d
    return None


# -- construction --------------------------------------------------------------


def test_fixture_matrices():
    assert markov_matrix().rows == MARKOV
    assert variant_matrix().rows == VARIANT
    assert rank4_matrix().frozen == frozenset({5})


def test_rank4_column_three():
    b = rank4_matrix()
    assert (b[1, 3], b[5, 3], b[2, 3], b[4, 3]) == (1, 1, -1, -1)


def test_skew_symmetrizers_match_brute_force():
    assert find_skew_symmetrizer(MARKOV) == (1, 1, 1) == brute_symmetrizer(MARKOV)
    assert find_skew_symmetrizer(VARIANT) == (4, 1, 1) == brute_symmetrizer(VARIANT)
    assert find_skew_symmetrizer(((0, 1), (1, 0))) is None


def test_non_symmetrizable_rejected():
    with pytest.raises(MatrixError):
        ExchangeMatrix(((0, 1), (1, 0)))


def test_malformed_rejected():
    with pytest.raises(MatrixError):
        ExchangeMatrix(((1, 0), (0, 0)))
    with pytest.raises(MatrixError):
        ExchangeMatrix(((0, 1, 0), (-1, 0)))
    with pytest.raises(MatrixError):
        ExchangeMatrix(((0, 1), (-1, 0)), mutable={3})


@settings(max_examples=80)
@given(symmetrizable())
def test_symmetrizer_is_minimal_and_valid(b):
    d = b.skew_symmetrizer()
    n = b.n
    assert math.gcd(*d) == 1
    assert all(d[i] * b.rows[i][j] == -d[j] * b.rows[j][i] for i in range(n) for j in range(n))


def test_dict_round_trip():
    b = rank4_matrix()
    assert ExchangeMatrix.from_dict(b.to_dict()) == b


# -- mutation ----------------------------------------------------------------


def test_markov_mutation_negates():
    b = markov_matrix()
    for k in (1, 2, 3):
        assert mutate_matrix(b, k).rows == tuple(tuple(-x for x in r) for r in MARKOV)


def test_variant_mutation_negates():
    for k in (1, 2, 3):
        assert mutate_matrix(variant_matrix(), k).rows == tuple(tuple(-x for x in r) for r in VARIANT)


def test_frozen_index_not_mutable():
    with pytest.raises(MutationIndexError):
        mutate_matrix(rank4_matrix(), 5)
    with pytest.raises(MutationIndexError):
        mutate_matrix(markov_matrix(), 4)


@given(symmetrizable(), st.data())
def test_mutation_matches_quiver_rule(b, data):
    k = data.draw(st.sampled_from(sorted(b.mutable)))
    assert mutate_matrix(b, k).rows == quiver_rule_mutation(b.rows, k)


@given(symmetrizable(), st.data())
def test_mutation_is_involution_and_keeps_symmetrizer(b, data):
    k = data.draw(st.sampled_from(sorted(b.mutable)))
    m = mutate_matrix(b, k)
    assert mutate_matrix(m, k) == b
    assert m.skew_symmetrizer() == b.skew_symmetrizer()


# -- isomorphism and classes ---------------------------------------------------


def test_isomorphism_markov_negated():
    b = markov_matrix()
    sigma = find_isomorphism(b, mutate_matrix(b, 1))
    assert sigma == (1, 3, 2)
    assert b.permute(sigma) == mutate_matrix(b, 1)


def test_rank4_relabels_are_isomorphisms():
    b = rank4_matrix()
    for k, sigma in RANK4_RELABEL.items():
        assert mutate_matrix(b, k).permute(sigma) == b


@settings(max_examples=50)
@given(symmetrizable(max_n=4), st.data())
def test_isomorphism_agrees_with_brute_force(b, data):
    perm = data.draw(st.permutations(range(1, b.n + 1)))
    c = ExchangeMatrix(b.permute(perm).rows, {perm.index(i) + 1 for i in b.mutable})
    sigma = find_isomorphism(b, c)
    assert sigma is not None
    assert b.permute(sigma).rows == c.rows
    assert canonical_form(b) == canonical_form(c)


def test_mutation_class_counts():
    expected = {
        "markov": (2, 1),
        "variant": (2, 1),
        "rank4": (24, 1),
        "rank4-nofrozen": (24, 1),
    }
    for name, (raw, iso) in expected.items():
        mc = mutation_class(FIXTURES[name]())
        assert mc.finite
        assert (len(mc.raw_class), len(mc.iso_classes)) == (raw, iso), name


def test_variant_raw_class_is_b_and_minus_b():
    b = variant_matrix()
    mc = mutation_class(b)
    assert {m.rows for m in mc.raw_class} == {VARIANT, tuple(tuple(-x for x in r) for r in VARIANT)}


def test_a3_class_has_four_iso_types():
    # path orientations and the oriented 3-cycle, up to relabeling
    mc = mutation_class(a3_matrix())
    assert mc.finite and len(mc.iso_classes) == 4


@settings(max_examples=30, deadline=None)
@given(symmetrizable(max_n=3), st.data())
def test_class_invariant_under_mutation(b, data):
    k = data.draw(st.sampled_from(sorted(b.mutable)))
    c1 = mutation_class(b, limit=50)
    c2 = mutation_class(mutate_matrix(b, k), limit=50)
    if c1.finite and c2.finite:
        assert {canonical_form(m) for m in c1.iso_classes} == {canonical_form(m) for m in c2.iso_classes}


def test_mutation_class_bad_limit():
    with pytest.raises(ValueError):
        mutation_class(markov_matrix(), limit=0)


# -- quivers -------------------------------------------------------------------


def test_quiver_to_markov_matrix():
    q = Quiver(((1, False), (2, False), (3, False)), ((1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)))
    assert quiver_to_matrix(q).rows == MARKOV


def test_opposite_arrows_cancel():
    q = Quiver(((1, False), (2, False)), ((1, 2), (2, 1), (1, 2)))
    assert quiver_to_matrix(q).rows == ((0, 1), (-1, 0))


def test_quiver_errors():
    with pytest.raises(QuiverError):
        quiver_to_matrix(Quiver(((1, False),), ((1, 1),)))
    with pytest.raises(QuiverError):
        Quiver(((1, False),), ((1, 2),))
    with pytest.raises(QuiverError):
        matrix_to_quiver(variant_matrix())


@given(symmetrizable())
def test_quiver_round_trip(b):
    if not b.is_skew_symmetric():
        return
    assert quiver_to_matrix(matrix_to_quiver(b)) == b


# -- gradings ------------------------------------------------------------------


def test_gradings_of_fixtures():
    assert grading_vectors(markov_matrix()) == [(1, 1, 1)]
    assert grading_vectors(variant_matrix()) == [(2, 1, 1)]
    assert (1, 1, 1, 1, 1) in grading_vectors(rank4_matrix())
    assert grading_vectors(rank4_nofrozen_matrix()) == []


@given(symmetrizable())
def test_grading_basis_spans_kernel(b):
    vs = grading_vectors(b)
    for v in vs:
        assert is_grading(b, v)
    cols = sorted(b.mutable)
    m = sympy.Matrix([[b.rows[i][k - 1] for k in cols] for i in range(b.n)]).T
    # kernel dimension of v -> v^T B restricted to mutable columns
    assert len(vs) == b.n - m.rank()
    if vs:
        assert sympy.Matrix(vs).rank() == len(vs)


def test_is_grading_rejects():
    assert not is_grading(markov_matrix(), (1, 0, 0))
