"""Exact cluster mutation, mutation invariants and Vieta-jumping solution trees."""

from .dio import (
    SearchReport,
    SolutionTree,
    enumerate_solutions,
    eval_invariant,
    markov_descend,
    numeric_mutate,
    oracle_solutions,
    rank4_reachability,
    tau_mutate,
    uniqueness_scan,
    variant_descend,
)
from .exmat import (
    ExchangeMatrix,
    Quiver,
    find_isomorphism,
    find_skew_symmetrizer,
    grading_vectors,
    mutate_matrix,
    mutation_class,
    quiver_to_matrix,
)
from .laurent import LaurentPoly, RationalFn, exact_div, fraction_equal, substitute, weighted_degree
from .seed import Seed, apply_word, build_invariant, initial_seed, mutate_seed, verify_invariance

__version__ = "0.1.0"
