import numpy as np
import pytest
from hypothesis import given, strategies as st

from symdet.ncpoly import (MAX_WORD_LENGTH, CPoly, DegreeError, NCPoly, commutative_image,
                           nc_arith, pit_equal, pit_matrix_eval)

letters = st.sampled_from(["a", "b", "c"])
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
ncpolys = st.dictionaries(st.lists(letters, max_size=3).map(tuple), coeffs,
                          max_size=4).map(NCPoly)


def test_word_order_matters():
    a, b = NCPoly.var("a"), NCPoly.var("b")
    assert a * b != b * a
    assert (a * b).coeff(["a", "b"]) == 1
    assert commutative_image(a * b) == commutative_image(b * a)


@given(ncpolys, ncpolys, ncpolys)
def test_ring_laws(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p + q == q + p
    assert p - p == NCPoly()
    assert p * NCPoly.const(1) == p == NCPoly.const(1) * p


@given(ncpolys)
def test_json_round_trip(p):
    assert NCPoly.from_json(p.to_json()) == p


@given(ncpolys, ncpolys)
def test_commutative_image_is_a_ring_map(p, q):
    assert commutative_image(p * q) == commutative_image(p) * commutative_image(q)
    assert commutative_image(p + q) == commutative_image(p) + commutative_image(q)


def test_subs():
    p = NCPoly.word(["x", "y", "x"], 3) + NCPoly.var("y")
    assert p.subs("x", 2) == NCPoly.word(["y"], 13)
    assert p.subs("y", 0) == NCPoly()


def test_degree_bound():
    big = NCPoly.word(["a"] * MAX_WORD_LENGTH)
    with pytest.raises(DegreeError):
        big * NCPoly.var("a")


def test_nc_arith():
    a, b = NCPoly.var("a"), NCPoly.var("b")
    assert nc_arith("mul", a, b, a).coeff(["a", "b", "a"]) == 1
    assert nc_arith("coeff", a + b, ["b"]) == 1
    with pytest.raises(ValueError):
        nc_arith("pow", a)


def test_cpoly_basics():
    x, y = CPoly.var("x"), CPoly.var("y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.coeff(["x", "x"]) == 1
    assert CPoly.from_json(p.to_json()) == p


def test_pit_is_deterministic_and_separates():
    ab = NCPoly.word(["a", "b"])
    ba = NCPoly.word(["b", "a"])
    assert np.array_equal(pit_matrix_eval(ab, 3, 0), pit_matrix_eval(ab, 3, 0))
    assert not pit_equal(ab, ba)
    assert pit_equal(ab + ba, ba + ab)


@given(ncpolys, ncpolys)
def test_pit_respects_products(p, q):
    lhs = pit_matrix_eval(p * q, 2, 1)
    rhs = pit_matrix_eval(p, 2, 1).dot(pit_matrix_eval(q, 2, 1))
    assert np.array_equal(lhs, rhs)
