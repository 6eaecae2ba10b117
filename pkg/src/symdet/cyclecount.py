"""Counting Hamiltonian cycles and k-cycles through the cycle algebra.

An undirected graph ``G`` on ``1..n`` becomes the matrix ``M_G`` with ``t`` on
the diagonal and ``s*u(i,j)`` on each edge position.  Every nonzero term of
``sdet(M_G)`` is a cycle of ``G`` read off a diagonal ``u(l,l)``: a k-cycle
with ``k < n`` lands on ``t s^k u(l,l)`` for each of its ``k`` vertices with
weight ``2 (-1)^(k+1) (n-k)! / n!``, and Hamiltonian cycles land on
``s^n u(l,l)``.
"""

from __future__ import annotations

import json
from random import Random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .algebra import AlgElement, CycleAlgebra, cycle_algebra
from .core import InvariantError, SizeCutoffError, factorial
from .sdet import AlgMatrix, sdet_fast

REDUCTION_CUTOFF = 7
BRUTE_FORCE_CUTOFF = 12


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``1..n``; undirected graphs store both orientations."""

    n: int
    directed: bool
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) outside 1..{self.n}")
            edges.add((u, v))
            if not self.directed:
                edges.add((v, u))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def undirected(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, False, frozenset(map(tuple, edges)))

    @classmethod
    def directed_graph(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, True, frozenset(map(tuple, edges)))

    @classmethod
    def complete(cls, n: int, directed: bool = False) -> "Graph":
        return cls(n, directed, frozenset((u, v) for u in range(1, n + 1)
                                          for v in range(1, n + 1) if u != v))

    @classmethod
    def cycle(cls, n: int, directed: bool = False) -> "Graph":
        return cls(n, directed, frozenset((i, i % n + 1) for i in range(1, n + 1)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, False, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def random(cls, n: int, p: float, rng: Random, directed: bool = False) -> "Graph":
        if directed:
            pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
        else:
            pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        return cls(n, directed, frozenset(e for e in pairs if rng.random() < p))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def neighbors(self, u: int) -> list:
        return sorted(v for (a, v) in self.edges if a == u)

    def edge_list(self) -> list:
        if self.directed:
            return sorted(self.edges)
        return sorted((u, v) for u, v in self.edges if u < v)

    def to_json(self) -> dict:
        return {"n": self.n, "directed": self.directed,
                "edges": [list(e) for e in self.edge_list()]}

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), bool(data.get("directed", False)),
                   frozenset(tuple(e) for e in data["edges"]))


def build_mg(G: Graph) -> AlgMatrix:
    if G.directed:
        raise ValueError("the cycle-counting reduction takes an undirected graph")
    if G.n < 3:
        raise ValueError("need at least 3 vertices")
    alg = cycle_algebra(G.n)
    t, zero = alg.t(), alg.zero()
    rows = [[t if i == j else (alg.su(i, j) if G.has_edge(i, j) else zero)
             for j in range(1, G.n + 1)] for i in range(1, G.n + 1)]
    return AlgMatrix(alg, tuple(tuple(r) for r in rows))


def reduction_sdet(G: Graph, max_n: int | None = None) -> AlgElement:
    limit = REDUCTION_CUTOFF if max_n is None else max_n
    if G.n > limit:
        raise SizeCutoffError(f"n={G.n} exceeds reduction cutoff {limit}")
    return sdet_fast(build_mg(G), max_n=max(limit, G.n))


def _require_count(value: Fraction, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1 or value < 0:
        raise InvariantError(f"{what} came out as {value}, not a nonnegative integer")
    return value.numerator


def hamiltonian_count(G: Graph, max_n: int | None = None, S: AlgElement | None = None) -> int:
    """Hamiltonian cycles of ``G`` from the coefficient of ``s^n u(1,1)``."""
    n = G.n
    if S is None:
        S = reduction_sdet(G, max_n)
    c = S.coeff((0, n, 1, 1))
    return _require_count(Fraction((-1) ** (n + 1)) * c * factorial(n) / 2,
                          "Hamiltonian cycle count")


def k_cycle_coefficient_sum(S: AlgElement, n: int, k: int) -> Fraction:
    return sum((Fraction(S.coeff((1, k, l, l))) for l in range(1, n + 1)), Fraction(0))


def k_cycle_count(G: Graph, k: int, max_n: int | None = None,
                  S: AlgElement | None = None, diagnostics: bool = False):
    """Number of (undirected) cycles of length ``k`` in ``G``.

    ``k == 2`` is only reachable with ``diagnostics=True``; it returns the
    raw rescaled value as a ``Fraction`` without the integrality check, since
    a 2-cycle is its own reverse and the counting argument doesn't cover it.
    """
    n = G.n
    if k == n:
        return hamiltonian_count(G, max_n, S)
    if not (3 <= k <= n or (k == 2 and diagnostics)):
        raise ValueError(f"k must satisfy 3 <= k <= n={n}, got {k}")
    if S is None:
        S = reduction_sdet(G, max_n)
    total = k_cycle_coefficient_sum(S, n, k)
    value = total * (-1) ** (k + 1) * factorial(n) / (2 * k * factorial(n - k))
    if k == 2:
        return value
    return _require_count(value, f"{k}-cycle count")


def all_cycle_counts(G: Graph, max_n: int | None = None) -> dict:
    """Counts for every ``3 <= k <= n`` from a single determinant."""
    S = reduction_sdet(G, max_n)
    return {k: k_cycle_count(G, k, S=S) for k in range(3, G.n + 1)}


@dataclass
class StructureReport:
    passed: bool
    problems: list

    def to_json(self) -> dict:
        return {"passed": self.passed, "problems": self.problems}


def check_reduction_structure(G: Graph, S: AlgElement | None = None) -> StructureReport:
    """Check the shape of ``sdet(M_G)`` that the counting relies on.

    Nonzero coefficients may sit only on diagonal labels ``s^n u(l,l)``,
    ``t s^k u(l,l)`` with ``2 <= k < n``, or ``t u(l,l)``; the latter must
    have coefficient 1, and the ``s^n`` coefficient must not depend on ``l``.
    """
    n = G.n
    if S is None:
        S = reduction_sdet(G, max_n=max(n, REDUCTION_CUTOFF))
    problems = []
    alg: CycleAlgebra = S.algebra
    for (a, b, i, j), c in S.items():
        ok = i == j and ((a == 0 and b == n) or (a == 1 and 2 <= b < n) or (a == 1 and b == 0))
        if not ok:
            problems.append(f"unexpected label {alg.label_str((a, b, i, j))} = {c}")
    for l in range(1, n + 1):
        if S.coeff((1, 0, l, l)) != 1:
            problems.append(f"coefficient of t u({l},{l}) is {S.coeff((1, 0, l, l))}, not 1")
    ham = {S.coeff((0, n, l, l)) for l in range(1, n + 1)}
    if len(ham) > 1:
        problems.append(f"s^n u(l,l) coefficients depend on l: {sorted(ham)}")
    return StructureReport(not problems, problems)


def brute_force_cycle_count(G: Graph, k: int, max_n: int = BRUTE_FORCE_CUTOFF) -> int:
    """Simple cycles of length ``k`` by backtracking.

    Each cycle is grown from its smallest vertex; the resulting closed walks
    are counted once per direction (divide by 2 when undirected).
    """
    if k < 3 and not (G.directed and k == 2):
        raise ValueError("k must be at least 3")
    if G.n > max_n:
        raise SizeCutoffError(f"n={G.n} exceeds brute-force bound {max_n}")
    adj = {u: G.neighbors(u) for u in range(1, G.n + 1)}
    found = 0

    def extend(start: int, path: list, on_path: set):
        nonlocal found
        last = path[-1]
        if len(path) == k:
            if start in adj[last]:
                found += 1
            return
        for v in adj[last]:
            if v > start and v not in on_path:
                path.append(v)
                on_path.add(v)
                extend(start, path, on_path)
                path.pop()
                on_path.discard(v)

    for start in range(1, G.n + 1):
        extend(start, [start], {start})
    if G.directed:
        return found
    assert found % 2 == 0
    return found // 2
