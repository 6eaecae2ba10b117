import random
from fractions import Fraction

import pytest

from symdet.acceptance import example_2x2_grid
from symdet.core import factorial
from symdet.cyclecount import Graph
from symdet.ncpoly import CPoly
from symdet.sdet import sdet_fast
from symdet.vnpred import (FamilyMonomial, build_vnp_matrix, check_vnp_structure, edge_var,
                           extract_hc, family_coefficients, family_monomial_coeff,
                           family_monomial_coeff_exact, hc_direct, sdet_family, trace_trace)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complete_digraph_words(n):
    G = Graph.complete(n, directed=True)
    hc = extract_hc(G)
    assert hc == hc_direct(G)
    assert len(hc) == factorial(n - 1)


def test_random_digraphs():
    rng = random.Random(4)
    for k in range(10):
        G = Graph.random(2 + k % 4, 0.6, rng, directed=True)
        assert extract_hc(G) == hc_direct(G)


def test_directed_cycle_word_order():
    G = Graph.directed_graph(3, [(1, 2), (2, 3), (3, 1)])
    assert extract_hc(G).coeff([edge_var(1, 2), edge_var(2, 3), edge_var(3, 1)]) == 1


def test_structure_and_trace():
    G = Graph.complete(4, directed=True)
    S = sdet_fast(build_vnp_matrix(G))
    assert check_vnp_structure(S) == []
    # every surviving 2x2 factor is the nilpotent f, so Tr (x) Tr sees nothing
    assert trace_trace(S).is_zero()


def test_undirected_input_rejected():
    with pytest.raises(ValueError):
        build_vnp_matrix(Graph.complete(3))


def test_family_2x2_golden():
    assert sdet_family(2, 2) == example_2x2_grid()


def test_family_scalar_case():
    T = sdet_family(1, 2)
    m = lambda i, j: CPoly.var(f"m_{i}_{j}_1_1")  # noqa: E731
    assert T == [[m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)]]


def test_family_single_block():
    T = sdet_family(2, 1)
    assert T[0][1] == CPoly.var("m_1_1_1_2")


def test_closed_form_examples():
    mono = FamilyMonomial(((1, 1, 1, 1), (2, 2, 1, 1)))
    assert family_monomial_coeff(mono, 1, 1, 2) == 1
    mono = FamilyMonomial(((1, 1, 1, 2), (2, 2, 2, 1)))
    assert family_monomial_coeff(mono, 1, 1, 2) == Fraction(1, 2)
    mono = FamilyMonomial(((1, 1, 2, 2), (2, 2, 2, 2)))
    assert family_monomial_coeff(mono, 1, 1, 2) == 0
    with pytest.raises(ValueError):
        family_monomial_coeff(FamilyMonomial(((1, 1, 1, 1), (1, 2, 1, 1))), 1, 1, 2)


def test_closed_form_matches_at_n2():
    T = sdet_family(2, 2)
    for k, l, mono, c in family_coefficients(T):
        assert family_monomial_coeff(mono, k, l, 2) == c


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3)])
def test_ordering_count_matches_expansion(m, n):
    T = sdet_family(m, n)
    for k, l, mono, c in family_coefficients(T):
        assert family_monomial_coeff_exact(mono, k, l, n) == c


def test_closed_form_ignores_index_chaining():
    # orderings must chain x -> y; only (1,1,1,1)(2,2,1,2)(3,3,2,1) in that order
    # and its cyclic shift through the 1->1 factor survive, giving 2/3!
    mono = FamilyMonomial(((1, 1, 1, 1), (2, 2, 1, 2), (3, 3, 2, 1)))
    assert family_monomial_coeff_exact(mono, 1, 1, 3) == Fraction(1, 3)
    assert sdet_family(2, 3)[0][0].coeff(mono.names()) == Fraction(1, 3)
    assert family_monomial_coeff(mono, 1, 1, 3) == Fraction(1, 2)
