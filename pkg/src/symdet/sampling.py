"""Seeded random algebra elements and matrices for tests and self-checks."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .algebra import AlgElement, Algebra, FreeAlgebra, TensorAlgebra
from .ncpoly import NCPoly
from .sdet import AlgMatrix

SMALL_RATIONALS = (1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-2, 3))
FREE_LETTERS = ("a", "b", "c")


def random_rational(rng: random.Random) -> Fraction | int:
    return rng.choice(SMALL_RATIONALS)


def random_ncpoly(rng: random.Random, letters: Sequence[str] = FREE_LETTERS,
                  max_terms: int = 2, max_len: int = 1) -> NCPoly:
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, max_len)))
        terms[word] = terms.get(word, 0) + random_rational(rng)
    return NCPoly(terms)


def _finite_labels(alg: Algebra) -> list:
    if isinstance(alg, FreeAlgebra):
        return ["1"]
    if isinstance(alg, TensorAlgebra) and isinstance(alg.right, FreeAlgebra):
        return [(a, "1") for a in alg.left.basis()]
    return alg.basis()


def random_element(alg: Algebra, rng: random.Random, max_terms: int = 3) -> AlgElement:
    """A nonzero element supported on at most ``max_terms`` basis labels."""
    labels = _finite_labels(alg)
    ncpoly = alg.coefficients == "ncpoly"
    chosen = rng.sample(labels, min(len(labels), rng.randint(1, max_terms)))
    return AlgElement(alg, {lab: random_ncpoly(rng) if ncpoly else random_rational(rng)
                            for lab in chosen})


def random_matrix(alg: Algebra, n: int, rng: random.Random, zero_prob: float = 0.25,
                  max_terms: int = 3) -> AlgMatrix:
    zero = alg.zero()
    rows = tuple(
        tuple(zero if rng.random() < zero_prob else random_element(alg, rng, max_terms)
              for _ in range(n))
        for _ in range(n)
    )
    return AlgMatrix(alg, rows)


def random_block_lower(alg: Algebra, p: int, q: int, rng: random.Random) -> AlgMatrix:
    """``[[A, 0], [B, D]]`` with random blocks of sizes ``p`` and ``q``."""
    M = random_matrix(alg, p + q, rng)
    zero = alg.zero()
    return M.map(lambda i, j, x: zero if i <= p < j else x)


def zero_lower_left(M: AlgMatrix, p: int) -> AlgMatrix:
    zero = M.algebra.zero()
    return M.map(lambda i, j, x: zero if j <= p < i else x)
