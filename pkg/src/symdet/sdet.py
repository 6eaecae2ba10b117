"""Cayley and symmetrized determinants over an arbitrary :class:`Algebra`.

Three evaluators of the symmetrized determinant are provided and must agree
exactly:

* :func:`sdet_naive` sums the ``(n!)^2`` ordered products literally.
* :func:`sdet_by_rows` groups the sum by the row order ``sigma``; each group
  is a Cayley determinant of the row-permuted matrix.
* :func:`sdet_fast` runs a dynamic programme over pairs (used rows, used
  columns).  The state after ``r`` factors is the signed sum of all ordered
  products whose row set is ``R`` and column set is ``C``; appending entry
  ``(i, j)`` contributes the inversions it forms with the larger indices
  already in ``R`` and ``C``.  Cost is ``sum_r C(n,r)^2 (n-r)^2`` products.

The empty matrix has determinant ``1``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence

from .algebra import AlgElement, Algebra, algebra_from_json
from .core import SizeCutoffError, all_permutations, factorial, sign

NAIVE_CUTOFF = 6
FAST_CUTOFF = 8


@dataclass(frozen=True, eq=False)
class AlgMatrix:
    algebra: Algebra
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for x in r:
                if x.algebra != self.algebra:
                    raise ValueError("all entries must belong to the matrix algebra")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> AlgElement:
        i, j = ij
        return self.entries[i - 1][j - 1]

    @classmethod
    def from_rows(cls, algebra: Algebra, rows: Sequence[Sequence]) -> "AlgMatrix":
        def lift(x):
            if isinstance(x, AlgElement):
                return x
            if x == 0:
                return algebra.zero()
            return algebra.one().scale(x)

        return cls(algebra, tuple(tuple(lift(x) for x in r) for r in rows))

    @classmethod
    def zeros(cls, algebra: Algebra, n: int) -> "AlgMatrix":
        z = algebra.zero()
        return cls(algebra, tuple(tuple(z for _ in range(n)) for _ in range(n)))

    @classmethod
    def identity(cls, algebra: Algebra, n: int) -> "AlgMatrix":
        z, one = algebra.zero(), algebra.one()
        return cls(algebra, tuple(tuple(one if i == j else z for j in range(n))
                                  for i in range(n)))

    def __add__(self, other: "AlgMatrix") -> "AlgMatrix":
        if other.n != self.n:
            raise ValueError("size mismatch")
        return AlgMatrix(self.algebra, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        ))

    def __eq__(self, other):
        return (isinstance(other, AlgMatrix) and self.algebra == other.algebra
                and self.entries == other.entries)

    def transpose(self) -> "AlgMatrix":
        """Transpose the arrangement; entries themselves are untouched."""
        return AlgMatrix(self.algebra, tuple(zip(*self.entries)))

    def permute_rows(self, order: Sequence[int]) -> "AlgMatrix":
        """Matrix whose k-th row is row ``order[k]`` (1-indexed)."""
        return AlgMatrix(self.algebra, tuple(self.entries[i - 1] for i in order))

    def scale_row(self, i: int, c) -> "AlgMatrix":
        rows = list(self.entries)
        rows[i - 1] = tuple(x.scale(c) for x in rows[i - 1])
        return AlgMatrix(self.algebra, tuple(rows))

    def map(self, fn: Callable[[int, int, AlgElement], AlgElement]) -> "AlgMatrix":
        return AlgMatrix(self.algebra, tuple(
            tuple(fn(i + 1, j + 1, x) for j, x in enumerate(r))
            for i, r in enumerate(self.entries)
        ))

    def to_json(self, algebra_spec: Any) -> dict:
        return {
            "algebra": algebra_spec,
            "n": self.n,
            "entries": [[x.to_json() for x in r] for r in self.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "AlgMatrix":
        alg = algebra_from_json(data["algebra"])
        n = int(data["n"])
        rows = data["entries"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"entries must form a {n}x{n} grid")
        return cls(alg, tuple(tuple(alg.element_from_json(x) for x in r) for r in rows))


def principal_submatrix(M: AlgMatrix, subset: Iterable[int]) -> AlgMatrix:
    idx = sorted(set(subset))
    if any(not 1 <= k <= M.n for k in idx):
        raise ValueError("subset out of range")
    return AlgMatrix(M.algebra, tuple(tuple(M[i, j] for j in idx) for i in idx))


# ----------------------------------------------------------------------------
# raw sparse kernels (dicts label -> coefficient)


def _accumulate(acc: dict, alg: Algebra, x: Mapping, y: Mapping, negate: bool) -> None:
    table = alg.product
    for a, ca in x.items():
        for b, cb in y.items():
            prods = table(a, b)
            if not prods:
                continue
            cc = ca * cb
            if negate:
                cc = -cc
            for k, s in prods:
                term = cc if s == 1 else cc * s
                prev = acc.get(k)
                acc[k] = term if prev is None else prev + term


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if v != 0}


def _finish(alg: Algebra, raw: Mapping, divisor: int) -> AlgElement:
    if divisor == 1:
        return AlgElement(alg, raw)
    out = {}
    for k, v in raw.items():
        if isinstance(v, int):
            q = Fraction(v, divisor)
            out[k] = q.numerator if q.denominator == 1 else q
        else:
            out[k] = v * Fraction(1, divisor)
    return AlgElement(alg, out)


def _check_size(n: int, max_n: int | None, default: int, name: str) -> None:
    limit = default if max_n is None else max_n
    if n > limit:
        raise SizeCutoffError(f"{name}: n={n} exceeds cutoff {limit}; raise max_n to force")


def cdet(M: AlgMatrix) -> AlgElement:
    """Cayley determinant: rows multiplied in order 1..n."""
    n = M.n
    alg = M.algebra
    if n == 0:
        return alg.one()
    rows = [[x._c for x in r] for r in M.entries]
    layer = {0: alg.unit_coeffs()}
    for r in range(n):
        nxt: dict = {}
        for cols, val in layer.items():
            for j in range(n):
                bit = 1 << j
                if cols & bit or not rows[r][j]:
                    continue
                flips = bin(cols >> (j + 1)).count("1")
                acc = nxt.setdefault(cols | bit, {})
                _accumulate(acc, alg, val, rows[r][j], flips % 2 == 1)
        layer = {k: v for k, v in ((k, _prune(v)) for k, v in nxt.items()) if v}
    return AlgElement(alg, layer.get((1 << n) - 1, {}))


def sdet_naive(M: AlgMatrix, max_n: int | None = None) -> AlgElement:
    """Literal signed sum over all ``(sigma, tau)`` pairs, divided by ``n!``.

    Pairs are walked depth-first position by position so that a shared
    prefix ``m_{sigma1 tau1} ... m_{sigmak tauk}`` is multiplied out once.
    Signs come from :func:`sign` on the finished permutations.
    """
    n = M.n
    _check_size(n, max_n, NAIVE_CUTOFF, "sdet_naive")
    alg = M.algebra
    if n == 0:
        return alg.one()
    entries = [[x._c for x in r] for r in M.entries]
    total: dict = {}
    sigma: list = []
    tau: list = []

    def walk(prod: dict, rows_left: list, cols_left: list):
        if not rows_left:
            neg = sign(sigma) * sign(tau) < 0
            for k, v in prod.items():
                prev = total.get(k, 0)
                total[k] = prev - v if neg else prev + v
            return
        for i in rows_left:
            for j in cols_left:
                f = entries[i - 1][j - 1]
                if not f:
                    continue
                nxt: dict = {}
                _accumulate(nxt, alg, prod, f, False)
                nxt = _prune(nxt)
                if not nxt:
                    continue
                sigma.append(i)
                tau.append(j)
                walk(nxt, [r for r in rows_left if r != i], [c for c in cols_left if c != j])
                sigma.pop()
                tau.pop()

    walk(alg.unit_coeffs(), list(range(1, n + 1)), list(range(1, n + 1)))
    return _finish(alg, _prune(total), factorial(n))


def sdet_by_rows(M: AlgMatrix, max_n: int | None = None) -> AlgElement:
    """``(1/n!) sum_sigma sgn(sigma) cdet(M with rows in order sigma)``."""
    n = M.n
    _check_size(n, max_n, FAST_CUTOFF, "sdet_by_rows")
    alg = M.algebra
    if n == 0:
        return alg.one()
    total: dict = {}
    for sigma in all_permutations(n):
        c = cdet(M.permute_rows(sigma))
        neg = sign(sigma) < 0
        for k, v in c.items():
            prev = total.get(k, 0)
            total[k] = prev - v if neg else prev + v
    return _finish(alg, _prune(total), factorial(n))


def _bisubset_dp(alg: Algebra, rows: list, n: int, seeds: dict) -> dict:
    layer = seeds  # states holding exactly one factor
    for _ in range(n - 1):
        nxt: dict = {}
        for (rs, cs), val in layer.items():
            for i in range(n):
                ib = 1 << i
                if rs & ib:
                    continue
                ri = rows[i]
                rflip = bin(rs >> (i + 1)).count("1")
                for j in range(n):
                    jb = 1 << j
                    if cs & jb or not ri[j]:
                        continue
                    flips = rflip + bin(cs >> (j + 1)).count("1")
                    acc = nxt.setdefault((rs | ib, cs | jb), {})
                    _accumulate(acc, alg, val, ri[j], flips % 2 == 1)
        layer = {k: v for k, v in ((k, _prune(v)) for k, v in nxt.items()) if v}
        if not layer:
            break
    full = (1 << n) - 1
    return layer.get((full, full), {})


def _dp_worker(args):
    alg, rows, n, seeds = args
    return _bisubset_dp(alg, rows, n, seeds)


def sdet_fast(M: AlgMatrix, max_n: int | None = None, workers: int = 1) -> AlgElement:
    """Symmetrized determinant by the (row set, column set) dynamic programme.

    ``workers > 1`` splits the first-factor choices across processes; the
    exact partial sums are combined in a fixed order, so the result is
    identical to the single-process run.
    """
    n = M.n
    _check_size(n, max_n, FAST_CUTOFF, "sdet_fast")
    alg = M.algebra
    if n == 0:
        return alg.one()
    rows = [[x._c for x in r] for r in M.entries]
    unit = alg.unit_coeffs()
    seeds = {}
    for i in range(n):
        for j in range(n):
            if rows[i][j]:
                acc: dict = {}
                _accumulate(acc, alg, unit, rows[i][j], False)
                acc = _prune(acc)
                if acc:
                    seeds[(1 << i, 1 << j)] = acc
    if workers <= 1 or len(seeds) < 2:
        raw = _bisubset_dp(alg, rows, n, seeds) if seeds else {}
    else:
        keys = sorted(seeds)
        chunks = [keys[k::workers] for k in range(workers)]
        jobs = [(alg, rows, n, {key: seeds[key] for key in chunk}) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_dp_worker, jobs))
        raw = {}
        for part in parts:
            for k, v in part.items():
                prev = raw.get(k)
                raw[k] = v if prev is None else prev + v
        raw = _prune(raw)
    return _finish(alg, raw, factorial(n))


ENGINES = {"naive": sdet_naive, "rows": sdet_by_rows, "fast": sdet_fast}


def sdet(M: AlgMatrix, method: str = "fast", max_n: int | None = None) -> AlgElement:
    try:
        engine = ENGINES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(ENGINES)}") from None
    return engine(M, max_n=max_n)


def pme_sum(M: AlgMatrix, method: str = "fast", max_n: int | None = None) -> AlgElement:
    """Sum of symmetrized determinants of all principal submatrices."""
    n = M.n
    total = M.algebra.zero()
    for k in range(n + 1):
        for subset in itertools.combinations(range(1, n + 1), k):
            total = total + sdet(principal_submatrix(M, subset), method, max_n=max_n)
    return total


def cofactor_det(rows: Sequence[Sequence]) -> Any:
    """Laplace expansion along the first row; an independent oracle."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


__all__ = [
    "AlgMatrix", "cdet", "cofactor_det", "pme_sum", "principal_submatrix", "sdet",
    "sdet_by_rows", "sdet_fast", "sdet_naive", "FAST_CUTOFF", "NAIVE_CUTOFF",
]
