"""Hamiltonian-cycle polynomials from symmetrized determinants.

Noncommutative side: a directed graph on ``1..n`` becomes a matrix over
``Mat(Q,2) ⊗ Mat(Q,n) ⊗ Free``.  Row 1 carries ``f = e(1,2)`` in the first
factor and every other row carries ``s = e(2,2)``; since ``f s = f`` and
``s f = 0`` only orderings that start at vertex 1 survive, and the middle
matrix units force the factors to chain into a directed Hamiltonian cycle.
The result is ``sdet = (-1)^(n+1)/n! * f ⊗ e(1,1) ⊗ HC``.

Commutative side: ``sdet`` over ``Mat(Q,m)`` with fully symbolic blocks
gives the ``m^2`` polynomials ``T(k,l)``; :func:`family_monomial_coeff`
evaluates the closed-form coefficient and
:func:`family_monomial_coeff_exact` counts the contributing orderings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import AlgElement, TensorAlgebra, free_algebra, matrix_algebra, tensor
from .core import factorial, sign
from .cyclecount import Graph
from .ncpoly import CPoly, NCPoly
from .sdet import FAST_CUTOFF, AlgMatrix, sdet_fast

F_LABEL = (1, 2)  # f = [[0,1],[0,0]]
S_LABEL = (2, 2)  # s = [[0,0],[0,1]]


def edge_var(i: int, j: int) -> str:
    return f"x_{i}_{j}"


def vnp_algebra(n: int) -> TensorAlgebra:
    return tensor(matrix_algebra(2), tensor(matrix_algebra(n), free_algebra()))


def build_vnp_matrix(G: Graph) -> AlgMatrix:
    if not G.directed:
        raise ValueError("the Hamiltonian-cycle construction takes a directed graph")
    n = G.n
    alg = vnp_algebra(n)
    zero = alg.zero()
    rows = []
    for i in range(1, n + 1):
        left = F_LABEL if i == 1 else S_LABEL
        row = []
        for j in range(1, n + 1):
            if i != j and G.has_edge(i, j):
                row.append(alg.basis_element((left, ((i, j), "1")), NCPoly.var(edge_var(i, j))))
            else:
                row.append(zero)
        rows.append(tuple(row))
    return AlgMatrix(alg, tuple(rows))


def _component_sum(S: AlgElement, keep) -> NCPoly:
    out = NCPoly()
    for (left, (mid, _)), c in S.items():
        if keep(left, mid):
            out = out + c
    return out


def trace_trace(S: AlgElement) -> NCPoly:
    """``(Tr ⊗ Tr ⊗ 1)`` applied to an element of the three-fold tensor algebra."""
    return _component_sum(S, lambda left, mid: left[0] == left[1] and mid[0] == mid[1])


def entry_trace(S: AlgElement, entry=F_LABEL) -> NCPoly:
    """Pick the ``entry`` of the 2x2 factor, take the trace of the n x n factor."""
    return _component_sum(S, lambda left, mid: left == entry and mid[0] == mid[1])


def extract_hc(G: Graph, max_n: int | None = None, S: AlgElement | None = None) -> NCPoly:
    """Hamiltonian-cycle polynomial of ``G`` read off ``sdet(build_vnp_matrix(G))``.

    The 2x2 factor of every surviving term is ``f``, whose trace vanishes, so
    the functional used is its ``(1,2)`` entry.  Scale is ``(-1)^(n+1) n!``.
    """
    n = G.n
    if S is None:
        S = sdet_fast(build_vnp_matrix(G), max_n=FAST_CUTOFF if max_n is None else max_n)
    return entry_trace(S) * ((-1) ** (n + 1) * factorial(n))


def check_vnp_structure(S: AlgElement) -> list:
    """Labels of nonzero terms whose factors are not ``f`` and ``e(1,1)``."""
    return [S.algebra.label_str(lab) for lab in S.labels()
            if lab[0] != F_LABEL or lab[1][0] != (1, 1)]


def hc_direct(G: Graph) -> NCPoly:
    """Sum of words ``x_{1,c1} x_{c1,c2} ... x_{c(n-1),1}`` over directed Hamiltonian cycles."""
    n = G.n
    if n < 2:
        raise ValueError("need at least 2 vertices")
    out: dict = {}
    for rest in itertools.permutations(range(2, n + 1)):
        tour = (1, *rest, 1)
        if all(G.has_edge(tour[k], tour[k + 1]) for k in range(n)):
            word = tuple(edge_var(tour[k], tour[k + 1]) for k in range(n))
            out[word] = out.get(word, 0) + 1
    return NCPoly(out)


# ----------------------------------------------------------------------------
# commutative family over Mat(Q, m)


def family_var(i: int, j: int, k: int, l: int) -> str:
    """Entry ``(k,l)`` of block ``(i,j)``."""
    return f"m_{i}_{j}_{k}_{l}"


def symbolic_family_matrix(m: int, n: int) -> AlgMatrix:
    alg = matrix_algebra(m, coefficients="cpoly")
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(
            alg.element({(k, l): CPoly.var(family_var(i, j, k, l))
                         for k in range(1, m + 1) for l in range(1, m + 1)})
            for j in range(1, n + 1)
        ))
    return AlgMatrix(alg, tuple(rows))


def sdet_family(m: int, n: int, M: AlgMatrix | None = None,
                max_n: int | None = None, workers: int = 1) -> list:
    """``T[k-1][l-1]``: entry ``(k,l)`` of ``sdet(M)`` as a commutative polynomial."""
    if M is None:
        M = symbolic_family_matrix(m, n)
    S = sdet_fast(M, max_n=max_n, workers=workers)
    return [[CPoly.lift(S.coeff((k, l))) for l in range(1, m + 1)] for k in range(1, m + 1)]


@dataclass(frozen=True)
class FamilyMonomial:
    """Product of factors ``m^{a,b}_{x,y}``, stored as ``(a, b, x, y)`` tuples."""

    factors: tuple

    @classmethod
    def from_cpoly_key(cls, key: tuple) -> "FamilyMonomial":
        factors = []
        for name, exp in key:
            _, a, b, x, y = name.split("_")
            factors.extend([(int(a), int(b), int(x), int(y))] * exp)
        return cls(tuple(sorted(factors)))

    @property
    def n(self) -> int:
        return len(self.factors)

    def is_wellformed(self) -> bool:
        n = self.n
        rows = sorted(f[0] for f in self.factors)
        cols = sorted(f[1] for f in self.factors)
        return rows == list(range(1, n + 1)) and cols == list(range(1, n + 1))

    def alpha(self) -> tuple:
        """The permutation sending ``a_r`` to ``b_r``."""
        images = [0] * self.n
        for a, b, _, _ in self.factors:
            images[a - 1] = b
        return tuple(images)

    def names(self) -> list:
        return [family_var(*f) for f in self.factors]

    def to_json(self) -> dict:
        return {"factors": [list(f) for f in self.factors]}


def _as_monomial(mono) -> FamilyMonomial:
    if isinstance(mono, FamilyMonomial):
        return mono
    return FamilyMonomial(tuple(tuple(int(v) for v in f) for f in mono))


def family_monomial_coeff(mono, k: int, l: int, n: int) -> Fraction:
    """Closed form ``K (n-2)!/n! sgn(alpha)`` with ``K = c1 c2 - c3``.

    ``c1`` counts factors with row index ``k``, ``c2`` factors with column
    index ``l``, ``c3`` factors with both.
    """
    mono = _as_monomial(mono)
    if mono.n != n or not mono.is_wellformed():
        raise ValueError(f"not a product of one entry from each block row and column: {mono}")
    if n < 2:
        # single factor: the coefficient is 1 exactly on the (k,l) entry
        (_, _, x, y), = mono.factors
        return Fraction(int(x == k and y == l))
    c1 = sum(1 for f in mono.factors if f[2] == k)
    c2 = sum(1 for f in mono.factors if f[3] == l)
    c3 = sum(1 for f in mono.factors if f[2] == k and f[3] == l)
    K = c1 * c2 - c3
    if K == 0:
        return Fraction(0)
    return Fraction(K * factorial(n - 2) * sign(mono.alpha()), factorial(n))


def family_monomial_coeff_exact(mono, k: int, l: int, n: int) -> Fraction:
    """Coefficient by counting orderings whose matrix indices chain from k to l.

    An ordering ``p_1..p_n`` of the factors contributes ``sgn(alpha)/n!`` when
    ``x_{p_1} = k``, ``y_{p_r} = x_{p_{r+1}}`` and ``y_{p_n} = l``; counted by a
    subset DP (Eulerian trails through labelled edges).
    """
    mono = _as_monomial(mono)
    if mono.n != n or not mono.is_wellformed():
        return Fraction(0)
    fs = mono.factors
    # ways[(used, end_index)] = number of valid partial orderings
    ways: dict = {}
    for r, f in enumerate(fs):
        if f[2] == k:
            ways[(1 << r, f[3])] = ways.get((1 << r, f[3]), 0) + 1
    for _ in range(n - 1):
        nxt: dict = {}
        for (used, end), w in ways.items():
            for r, f in enumerate(fs):
                if used >> r & 1 or f[2] != end:
                    continue
                key = (used | 1 << r, f[3])
                nxt[key] = nxt.get(key, 0) + w
        ways = nxt
    count = ways.get(((1 << n) - 1, l), 0)
    return Fraction(count * sign(mono.alpha()), factorial(n))


def family_coefficients(T: Sequence[Sequence[CPoly]]) -> Iterable:
    """Yield ``(k, l, FamilyMonomial, coefficient)`` for every term of the grid."""
    for k, row in enumerate(T, start=1):
        for l, poly in enumerate(row, start=1):
            for key, c in poly.items():
                yield k, l, FamilyMonomial.from_cpoly_key(key), c


def example_block_names() -> dict:
    """Block letters ``a, b, c, d`` for the 2x2 case."""
    return {(1, 1): "a", (1, 2): "b", (2, 1): "c", (2, 2): "d"}
