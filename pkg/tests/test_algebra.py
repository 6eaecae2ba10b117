import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symdet.algebra import (AlgebraMismatchError, StructureConstantAlgebra, algebra_from_json,
                            builtin_algebra, check_algebra, cycle_algebra, cycle_instantiation,
                            free_algebra, instantiate_cycle_algebra, instantiate_element,
                            matrix_algebra, tensor)
from symdet.ncpoly import NCPoly
from symdet.sampling import random_element


@pytest.mark.parametrize("name", ["scalar", "mat:1", "mat:2", "mat:3", "cycle:2", "cycle:3",
                                  "mat:2|mat:2", "mat:2|cycle:2"])
def test_builtins_are_associative_and_unital(name):
    report = check_algebra(builtin_algebra(name))
    assert report.passed, report.message


def test_corrupted_table_is_caught():
    alg = StructureConstantAlgebra.from_algebra(matrix_algebra(2))
    bad = alg.corrupted("e(1,2)", "e(2,1)", [("e(2,2)", 1)])
    report = check_algebra(bad)
    assert not report.passed
    assert report.witness is not None


def test_structure_constant_json_round_trip():
    alg = StructureConstantAlgebra.from_algebra(cycle_algebra(2))
    again = algebra_from_json(alg.to_json())
    assert again.to_json() == alg.to_json()
    assert check_algebra(again).passed


def test_structure_constant_default_basis():
    # dual numbers Q[e]/(e^2) with labels "1", "2"
    alg = StructureConstantAlgebra.from_json(
        {"dim": 2, "unit": {"1": "1"},
         "mul": [["1", "1", [["1", "1"]]], ["1", "2", [["2", "1"]]], ["2", "1", [["2", "1"]]]]})
    assert check_algebra(alg).passed
    e = alg.basis_element("2")
    assert (e * e).is_zero()


def test_structure_constant_rejects_unknown_labels():
    with pytest.raises(ValueError):
        StructureConstantAlgebra(["1"], {("1", "1"): [("9", 1)]}, {"1": 1})


def test_cycle_algebra_rules():
    alg = cycle_algebra(3)
    t, s = alg.t(), alg.s()
    assert t * t == t
    assert (s * t).is_zero()
    assert not (t * s).is_zero()
    assert alg.u(1, 2) * alg.u(2, 3) == alg.u(1, 3)
    assert (alg.u(1, 2) * alg.u(3, 1)).is_zero()
    assert (s * s * s * s).is_zero()  # beta stops at n
    assert s * alg.u(1, 2) == alg.u(1, 2) * s == alg.su(1, 2)


def test_cycle_label_round_trip():
    alg = cycle_algebra(3)
    for lab in alg.basis():
        assert alg.parse_label(alg.label_str(lab)) == lab
    with pytest.raises(ValueError):
        alg.parse_label("t^2.s^0.u(1,1)")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cycle_instantiation_is_a_homomorphism(n):
    report = instantiate_cycle_algebra(n)
    assert report.passed, report.counterexample
    assert report.checked == len(cycle_algebra(n).basis()) ** 2


def test_instantiation_is_not_injective():
    # s^n and t s^n land on the same matrix since only the first row of s^n survives
    n = 3
    images = cycle_instantiation(n)
    alg = cycle_algebra(n)
    a = instantiate_element(alg.basis_element((0, n, 1, 1)), images)
    b = instantiate_element(alg.basis_element((1, n, 1, 1)), images)
    assert np.array_equal(a, b)


@given(st.integers(0, 10**6))
def test_random_elements_associate(seed):
    rng = random.Random(seed)
    alg = builtin_algebra("mat:2|cycle:2")
    x, y, z = (random_element(alg, rng, 4) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * alg.one() == x == alg.one() * x


def test_tensor_with_free_keeps_word_order():
    alg = tensor(matrix_algebra(2), free_algebra())
    x = alg.basis_element(((1, 1), "1"), NCPoly.var("a"))
    y = alg.basis_element(((1, 1), "1"), NCPoly.var("b"))
    assert (x * y).coeff(((1, 1), "1")) == NCPoly.word(["a", "b"])


def test_free_algebra_is_rejected_by_check():
    with pytest.raises(ValueError):
        check_algebra(free_algebra())


def test_mixing_algebras_raises():
    with pytest.raises(AlgebraMismatchError):
        matrix_algebra(2).one() + matrix_algebra(3).one()


def test_element_json_round_trip():
    alg = builtin_algebra("mat:2|free")
    rng = random.Random(3)
    x = random_element(alg, rng, 3)
    assert alg.element_from_json(x.to_json()) == x
