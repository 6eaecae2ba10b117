import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symdet.algebra import builtin_algebra, cycle_algebra, free_algebra, matrix_algebra
from symdet.core import SizeCutoffError, sign
from symdet.ncpoly import NCPoly
from symdet.sampling import random_block_lower, random_matrix, zero_lower_left
from symdet.sdet import (AlgMatrix, cdet, cofactor_det, pme_sum, principal_submatrix, sdet,
                         sdet_by_rows, sdet_fast, sdet_naive)

ALGEBRAS = {"mat:2": 3, "cycle:3": 8, "free": 1}


def free_matrix(names):
    alg = free_algebra()
    return AlgMatrix.from_rows(alg, [[alg.poly(NCPoly.var(x)) for x in row] for row in names])


def scalar_matrix(rows):
    return AlgMatrix.from_rows(builtin_algebra("scalar"), rows)


def test_free_2x2_by_hand():
    M = free_matrix([["a", "b"], ["c", "d"]])
    half = Fraction(1, 2)
    expect = (NCPoly.word("ad") - NCPoly.word("bc") - NCPoly.word("cb") + NCPoly.word("da")) * half
    for engine in (sdet_naive, sdet_by_rows, sdet_fast):
        assert engine(M).coeff("1") == expect
    assert cdet(M).coeff("1") == NCPoly.word("ad") - NCPoly.word("bc")


def test_free_3x3_against_definition():
    # the definition written out with itertools, independent of every engine
    names = [[f"m{i}{j}" for j in range(1, 4)] for i in range(1, 4)]
    total = NCPoly()
    for s in itertools.permutations(range(3)):
        for t in itertools.permutations(range(3)):
            word = [names[s[k]][t[k]] for k in range(3)]
            total = total + NCPoly.word(word, sign([x + 1 for x in s]) * sign([x + 1 for x in t]))
    assert sdet_fast(free_matrix(names)).coeff("1") == total * Fraction(1, 6)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_engines_agree(name, n):
    alg = builtin_algebra(name)
    rng = random.Random(f"engines/{name}/{n}")
    for _ in range(4):
        M = random_matrix(alg, n, rng, max_terms=ALGEBRAS[name])
        a = sdet_naive(M)
        assert a == sdet_fast(M) == sdet_by_rows(M)


def test_empty_matrix_is_one():
    alg = matrix_algebra(2)
    M = AlgMatrix.zeros(alg, 0)
    for engine in (sdet_naive, sdet_by_rows, sdet_fast, cdet):
        assert engine(M) == alg.one()


def test_size_cutoffs():
    M = AlgMatrix.identity(matrix_algebra(1), 7)
    with pytest.raises(SizeCutoffError):
        sdet_naive(M)
    assert sdet_naive(M, max_n=7) == matrix_algebra(1).one()
    with pytest.raises(SizeCutoffError):
        sdet_fast(AlgMatrix.identity(matrix_algebra(1), 9))


def test_unknown_method():
    with pytest.raises(ValueError):
        sdet(AlgMatrix.identity(matrix_algebra(1), 2), method="ryser")


@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_commutative_case_is_the_determinant(rows):
    assert sdet_fast(scalar_matrix(rows)).coeff((1, 1)) == cofactor_det(rows)
    assert cdet(scalar_matrix(rows)).coeff((1, 1)) == cofactor_det(rows)


def test_principal_submatrix():
    M = free_matrix([[f"m{i}{j}" for j in range(1, 4)] for i in range(1, 4)])
    assert principal_submatrix(M, [1, 2, 3]) == M
    assert principal_submatrix(M, []).n == 0
    assert principal_submatrix(M, [2]).entries[0][0] == M[2, 2]


def test_pme_small_cases():
    alg = free_algebra()
    a = alg.poly(NCPoly.var("a"))
    M = AlgMatrix.from_rows(alg, [[a]])
    assert pme_sum(M) == alg.one() + a == sdet_fast(M + AlgMatrix.identity(alg, 1))
    rows = [[2, 3], [5, 7]]
    # classical: det(M + I) = 1 + tr M + det M
    assert pme_sum(scalar_matrix(rows)).coeff((1, 1)) == 1 + 9 + (14 - 15)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_principal_minor_expansion(name):
    alg = builtin_algebra(name)
    rng = random.Random(f"pme/{name}")
    for n in range(1, 5):
        A = random_matrix(alg, n, rng, max_terms=ALGEBRAS[name])
        lhs = sdet_naive(A + AlgMatrix.identity(alg, n))
        assert lhs == pme_sum(A, method="naive") == pme_sum(A)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_block_lower_triangular(name):
    alg = builtin_algebra(name)
    rng = random.Random(f"block/{name}")
    for p, q in [(1, 1), (1, 2), (2, 2), (3, 1)]:
        M = random_block_lower(alg, p, q, rng)
        assert sdet_fast(M) == sdet_fast(zero_lower_left(M, p))


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_transpose_of_arrangement(name):
    alg = builtin_algebra(name)
    rng = random.Random(f"transpose/{name}")
    for n in range(1, 5):
        M = random_matrix(alg, n, rng, max_terms=ALGEBRAS[name])
        assert sdet_fast(M.transpose()) == sdet_fast(M)


def test_cdet_is_not_transpose_symmetric():
    M = free_matrix([["a", "b"], ["c", "d"]])
    assert cdet(M) != cdet(M.transpose())


@given(st.integers(0, 10**6), st.integers(1, 4), st.fractions(min_value=-5, max_value=5))
def test_row_scaling(seed, n, c):
    alg = builtin_algebra("mat:2")
    M = random_matrix(alg, n, random.Random(seed))
    i = seed % n + 1
    assert sdet_fast(M.scale_row(i, c)) == sdet_fast(M).scale(c)


def test_row_swap_flips_sign():
    alg = builtin_algebra("mat:2")
    M = random_matrix(alg, 3, random.Random(9))
    assert sdet_fast(M.permute_rows((2, 1, 3))) == -sdet_fast(M)


def test_matrix_json_round_trip():
    alg = cycle_algebra(3)
    M = random_matrix(alg, 3, random.Random(1), max_terms=4)
    data = M.to_json("cycle:3")
    assert AlgMatrix.from_json(data) == M


def test_parallel_fast_matches_serial():
    alg = builtin_algebra("mat:2")
    M = random_matrix(alg, 5, random.Random(2))
    assert sdet_fast(M, workers=3) == sdet_fast(M)


def test_division_once_keeps_integers():
    S = sdet_fast(AlgMatrix.identity(matrix_algebra(2), 4))
    assert S == matrix_algebra(2).one()
    assert all(isinstance(c, int) for _, c in S.items())
