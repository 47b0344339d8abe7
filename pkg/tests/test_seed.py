import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from clustervieta.exmat import ExchangeMatrix, MutationIndexError
from clustervieta.fixtures import SYSTEM_MATRIX, a3_matrix, markov_matrix, rank4_matrix, variant_matrix
from clustervieta.laurent import LaurentPoly, RationalFn, fraction_equal, parse, render
from clustervieta.seed import (
    ALLOWED_DEGREES,
    SYSTEM_GRADING,
    SeedCache,
    apply_word,
    audit_seed,
    build_invariant,
    enumerate_exchange_graph,
    exchange_binomial,
    exchange_degrees,
    initial_seed,
    mutate_seed,
    mutation_maps,
    random_audit,
    reduce_word,
    seed_mutation_map,
    verify_invariance,
)

X1, X2, X3 = LaurentPoly.gens(3)


def sympy_cluster(rows, word):
    """Independent oracle: iterate raw exchange relations with sympy.cancel."""
    n = len(rows)
    xs = list(sympy.symbols(f"x1:{n + 1}"))
    b = [list(r) for r in rows]
    for k in word:
        k -= 1
        pos = sympy.Mul(*[xs[i] ** b[i][k] for i in range(n) if b[i][k] > 0])
        neg = sympy.Mul(*[xs[i] ** -b[i][k] for i in range(n) if b[i][k] < 0])
        xs[k] = sympy.cancel((pos + neg) / xs[k])
        nb = [r[:] for r in b]
        for i in range(n):
            for j in range(n):
                if k in (i, j):
                    nb[i][j] = -b[i][j]
                else:
                    nb[i][j] = b[i][j] + (b[i][k] * abs(b[k][j]) + abs(b[i][k]) * b[k][j]) // 2
        b = nb
    return xs


def to_sympy(p):
    syms = sympy.symbols(f"x1:{p.nvars + 1}")
    return sum((c * sympy.Mul(*[s**k for s, k in zip(syms, e)]) for e, c in p.items()), sympy.Integer(0))


def test_markov_first_mutation():
    s = mutate_seed(initial_seed(markov_matrix()), 1)
    assert s.vars[0] == parse("x1^(-1)*x2^2 + x1^(-1)*x3^2", 3)
    assert s.vars[1:] == (X2, X3)
    assert s.history == (1,)


def test_variant_exchange_binomials():
    s = initial_seed(variant_matrix())
    assert exchange_binomial(s, 1) == X2**4 + X3**4
    assert exchange_binomial(s, 2) == X1 + X3**2
    assert exchange_binomial(s, 3) == X1 + X2**2


def test_rank4_exchange_binomials():
    s = initial_seed(rank4_matrix())
    x = LaurentPoly.gens(5)
    assert exchange_binomial(s, 3) == x[0] * x[4] + x[1] * x[3]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["markov", "variant", "rank4"]), st.data())
def test_seed_agrees_with_sympy(system, data):
    b = SYSTEM_MATRIX[system]()
    word = data.draw(st.lists(st.sampled_from(sorted(b.mutable)), max_size=4))
    s = apply_word(initial_seed(b), word)
    for ours, ref in zip(s.vars, sympy_cluster(b.rows, word)):
        assert sympy.expand(to_sympy(ours) - ref) == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["markov", "variant", "rank4"]), st.data())
def test_history_replay(system, data):
    b = SYSTEM_MATRIX[system]()
    word = data.draw(st.lists(st.sampled_from(sorted(b.mutable)), max_size=6))
    s = apply_word(initial_seed(b), word)
    assert s.history == tuple(word)
    assert apply_word(initial_seed(b), s.history) == s


@given(st.lists(st.integers(1, 3), max_size=8))
def test_reduce_word_gives_same_seed(word):
    b = markov_matrix()
    a = apply_word(initial_seed(b), word)
    r = apply_word(initial_seed(b), reduce_word(word))
    assert a.vars == r.vars and a.matrix == r.matrix


def test_seed_cache_reuses_prefixes():
    cache = SeedCache(initial_seed(markov_matrix()))
    s = cache.get([1, 2, 2, 3])
    assert s.history == (1, 3)
    assert cache.get([1, 3]) is s


def test_frozen_not_mutable():
    with pytest.raises(MutationIndexError):
        mutate_seed(initial_seed(rank4_matrix()), 5)


def test_a1_exchange_graph():
    g = enumerate_exchange_graph(initial_seed(ExchangeMatrix(((0,),))))
    assert g.complete
    assert {render(v) for v in g.variables} == {"x1", "2*x1^(-1)"}


def test_a3_exchange_graph():
    g = enumerate_exchange_graph(initial_seed(a3_matrix()))
    assert g.complete
    assert len(g.clusters) == 14
    assert len(g.variables) == 9


def test_markov_exchange_graph_is_infinite():
    g = enumerate_exchange_graph(initial_seed(markov_matrix()), max_seeds=50)
    assert not g.complete and len(g.clusters) == 50


# -- invariants ----------------------------------------------------------------


@pytest.mark.parametrize("system", ["markov", "variant", "rank4"])
def test_invariance(system):
    rep = verify_invariance(system)
    assert rep.passed
    assert sorted(rep.results) == ([1, 2, 3, 4] if system == "rank4" else [1, 2, 3])


@pytest.mark.parametrize("system", ["markov", "variant", "rank4"])
def test_printed_maps_equal_seed_mutation(system):
    for k, images in mutation_maps(system).items():
        derived = seed_mutation_map(system, k)
        assert all(fraction_equal(a, b) for a, b in zip(images, derived))


def test_broken_map_detected():
    # sanity: the check is not vacuous
    t = build_invariant("markov")
    from clustervieta.laurent import substitute

    bad = (RationalFn(X2**2 + 2 * X3**2, X1), RationalFn(X2), RationalFn(X3))
    assert not fraction_equal(substitute(t, bad), t)


def test_invariant_values():
    assert build_invariant("markov").evaluate([1, 1, 1]) == 3
    assert build_invariant("variant").evaluate([1, 1, 1]) == 7
    assert build_invariant("rank4").evaluate([1, 1, 1, 1, 1]) == 9


# -- audits --------------------------------------------------------------------


def test_exchange_degrees():
    for system, expected in (("markov", [2, 2, 2]), ("variant", [4, 2, 2]), ("rank4", [2, 2, 2, 2])):
        s = initial_seed(SYSTEM_MATRIX[system]())
        assert list(exchange_degrees(s, SYSTEM_GRADING[system]).values()) == expected


def test_audit_flags_wrong_grading():
    s = apply_word(initial_seed(markov_matrix()), [1])
    assert audit_seed(s, (1, 1, 1), {1}).ok
    rep = audit_seed(s, (1, 2, 3))
    assert not rep.ok and "not homogeneous" in rep.failures[0]


def test_variant_degrees():
    s = apply_word(initial_seed(variant_matrix()), [1, 2, 3])
    rep = audit_seed(s, (2, 1, 1), ALLOWED_DEGREES["variant"])
    assert rep.ok and rep.degrees == [2, 1, 1]


@pytest.mark.parametrize("system", ["markov", "variant", "rank4"])
def test_random_audit_small(system):
    reps = random_audit(system, trials=50, max_len=5, rng_seed=1)
    assert all(r.ok for r in reps)
