"""Associative unital algebras as basis-level multiplication oracles.

An algebra exposes ``mul_basis(a, b)``, the expansion of the product of two
basis labels as ``((label, constant), ...)``, plus its unit.  Elements are
sparse ``label -> coefficient`` maps.  Coefficients are usually rationals;
when the rightmost tensor factor is the free algebra they are
:class:`~symdet.ncpoly.NCPoly` values, multiplied left-to-right so that word
order is preserved.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .core import SizeCutoffError, SymdetError, as_rational, format_rational
from .ncpoly import CPoly, NCPoly

Label = Hashable


class AlgebraMismatchError(SymdetError):
    pass


def _is_zero(c) -> bool:
    return c == 0 if isinstance(c, (int, Fraction)) else c.is_zero()


class AlgElement:
    """Immutable sparse element of an :class:`Algebra`."""

    __slots__ = ("algebra", "_c")

    def __init__(self, algebra: "Algebra", coeffs: Mapping[Label, Any] | None = None):
        self.algebra = algebra
        self._c = {k: v for k, v in (coeffs or {}).items() if not _is_zero(v)}

    def coeff(self, label) -> Any:
        return self._c.get(label, 0)

    def items(self):
        return self._c.items()

    def labels(self):
        return self._c.keys()

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def _check(self, other: "AlgElement"):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"elements of {self.algebra!r} and {other.algebra!r} cannot be combined"
            )

    def __add__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return AlgElement(self.algebra, out)

    def __neg__(self):
        return AlgElement(self.algebra, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgElement":
        """Multiply by a central scalar (rational or commuting polynomial)."""
        if isinstance(c, (int, Fraction)) and c == 0:
            return AlgElement(self.algebra)
        return AlgElement(self.algebra, {k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, AlgElement):
            return NotImplemented
        self._check(other)
        table = self.algebra.product
        out: dict = {}
        for a, ca in self._c.items():
            for b, cb in other._c.items():
                prods = table(a, b)
                if not prods:
                    continue
                cc = ca * cb
                for k, s in prods:
                    term = cc if s == 1 else cc * s
                    prev = out.get(k)
                    out[k] = term if prev is None else prev + term
        return AlgElement(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        if self.algebra != other.algebra:
            return False
        if self._c.keys() != other._c.keys():
            return False
        return all(self._c[k] == other._c[k] for k in self._c)

    def __hash__(self):
        return hash((self.algebra, frozenset(self._c.keys())))

    def __repr__(self):
        if not self._c:
            return f"<0 in {self.algebra!r}>"
        parts = [f"{_coeff_repr(v)}*{self.algebra.label_str(k)}" for k, v in self.sorted_items()]
        return " + ".join(parts)

    def sorted_items(self):
        return sorted(self._c.items(), key=lambda kv: self.algebra.sort_key(kv[0]))

    def to_json(self) -> dict:
        return {
            self.algebra.label_str(k): coeff_to_json(v) for k, v in self.sorted_items()
        }


def _coeff_repr(c) -> str:
    if isinstance(c, (int, Fraction)):
        return format_rational(c)
    return repr(c)


def coeff_to_json(c):
    if isinstance(c, (int, Fraction)):
        return format_rational(c)
    return c.to_json()


class Algebra:
    """Base class.  Subclasses define ``_mul_basis``, ``unit_coeffs`` and labels."""

    kind = "abstract"
    #: "rational", "ncpoly" or "cpoly": what element coefficients hold
    coefficients = "rational"

    def __init__(self):
        self._cache: dict = {}

    # subclass hooks
    def _mul_basis(self, a, b) -> tuple:
        raise NotImplementedError

    def unit_coeffs(self) -> dict:
        raise NotImplementedError

    def basis(self) -> list | None:
        return None

    @property
    def dim(self) -> int | None:
        b = self.basis()
        return None if b is None else len(b)

    def label_str(self, label) -> str:
        return str(label)

    def parse_label(self, text: str):
        raise NotImplementedError

    def sort_key(self, label):
        return label

    @property
    def key(self):
        return (self.kind, id(self))

    # shared behaviour
    def product(self, a, b) -> tuple:
        """Cached ``mul_basis``."""
        k = (a, b)
        try:
            return self._cache[k]
        except KeyError:
            r = self._cache[k] = tuple(self._mul_basis(a, b))
            return r

    mul_basis = product

    def element(self, coeffs: Mapping | None = None) -> AlgElement:
        return AlgElement(self, coeffs)

    def basis_element(self, label, coeff=1) -> AlgElement:
        return AlgElement(self, {label: coeff})

    def zero(self) -> AlgElement:
        return AlgElement(self)

    def one(self) -> AlgElement:
        return AlgElement(self, self.unit_coeffs())

    def parse_coeff(self, data):
        if isinstance(data, (str, int)):
            return as_rational(data)
        if self.coefficients == "ncpoly":
            return NCPoly.from_json(data)
        if self.coefficients == "cpoly":
            return CPoly.from_json(data)
        raise ValueError(f"cannot parse coefficient {data!r}")

    def element_from_json(self, data: Mapping[str, Any]) -> AlgElement:
        out: dict = {}
        for text, value in data.items():
            label = self.parse_label(text)
            out[label] = out.get(label, 0) + self.parse_coeff(value)
        return AlgElement(self, out)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_cache"] = {}
        return state


class MatrixAlgebra(Algebra):
    """``Mat(Q, m, m)`` with matrix units ``e(i,j)`` as basis (1-indexed)."""

    kind = "matrix"

    def __init__(self, m: int, coefficients: str = "rational"):
        if m < 1:
            raise ValueError("matrix size must be positive")
        super().__init__()
        self.m = m
        self.coefficients = coefficients

    @property
    def key(self):
        return ("matrix", self.m, self.coefficients)

    def basis(self):
        r = range(1, self.m + 1)
        return [(i, j) for i in r for j in r]

    def _mul_basis(self, a, b):
        return (((a[0], b[1]), 1),) if a[1] == b[0] else ()

    def unit_coeffs(self):
        return {(i, i): 1 for i in range(1, self.m + 1)}

    def unit_matrix(self, i: int, j: int, coeff=1) -> AlgElement:
        return self.basis_element((i, j), coeff)

    def from_array(self, rows: Sequence[Sequence]) -> AlgElement:
        return self.element(
            {(i + 1, j + 1): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        )

    def to_array(self, x: AlgElement) -> list:
        return [[x.coeff((i, j)) for j in range(1, self.m + 1)] for i in range(1, self.m + 1)]

    def label_str(self, label):
        return f"e({label[0]},{label[1]})"

    def parse_label(self, text):
        text = text.strip()
        if not (text.startswith("e(") and text.endswith(")")):
            raise ValueError(f"bad matrix-unit label {text!r}")
        i, j = (int(x) for x in text[2:-1].split(","))
        if not (1 <= i <= self.m and 1 <= j <= self.m):
            raise ValueError(f"label {text!r} out of range for Mat({self.m})")
        return (i, j)

    def __repr__(self):
        return f"MatrixAlgebra({self.m})"


def matrix_algebra(m: int, coefficients: str = "rational") -> MatrixAlgebra:
    return MatrixAlgebra(m, coefficients)


class FreeAlgebra(Algebra):
    """The free algebra, carried as one basis label ``"1"`` with NCPoly coefficients."""

    kind = "free"
    coefficients = "ncpoly"

    @property
    def key(self):
        return ("free",)

    def basis(self):
        return None

    def _mul_basis(self, a, b):
        return (("1", 1),)

    def unit_coeffs(self):
        return {"1": 1}

    def poly(self, p: NCPoly) -> AlgElement:
        return self.basis_element("1", p)

    def label_str(self, label):
        return "1"

    def parse_label(self, text):
        if text.strip() != "1":
            raise ValueError(f"free algebra has the single label '1', got {text!r}")
        return "1"

    def __repr__(self):
        return "FreeAlgebra()"


def free_algebra() -> FreeAlgebra:
    return FreeAlgebra()


class TensorAlgebra(Algebra):
    """``A ⊗ B`` on label pairs, multiplied componentwise."""

    kind = "tensor"
    SEP = "⊗"

    def __init__(self, left: Algebra, right: Algebra):
        if left.basis() is None:
            raise ValueError("only the rightmost tensor factor may be infinite-dimensional")
        super().__init__()
        self.left = left
        self.right = right
        self.coefficients = right.coefficients

    @property
    def key(self):
        return ("tensor", self.left.key, self.right.key)

    def basis(self):
        rb = self.right.basis()
        if rb is None:
            return None
        return [(a, b) for a in self.left.basis() for b in rb]

    def _mul_basis(self, x, y):
        out = []
        for a, ca in self.left.product(x[0], y[0]):
            for b, cb in self.right.product(x[1], y[1]):
                out.append(((a, b), ca * cb))
        return out

    def unit_coeffs(self):
        return {
            (a, b): ca * cb
            for a, ca in self.left.unit_coeffs().items()
            for b, cb in self.right.unit_coeffs().items()
        }

    def pure(self, x: AlgElement, y: AlgElement) -> AlgElement:
        """The elementary tensor ``x ⊗ y``."""
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                out[(a, b)] = out.get((a, b), 0) + cb * ca
        return AlgElement(self, out)

    def label_str(self, label):
        return f"{self.left.label_str(label[0])}{self.SEP}{self.right.label_str(label[1])}"

    def parse_label(self, text):
        parts = text.split(self.SEP)
        for cut in range(1, len(parts)):
            try:
                a = self.left.parse_label(self.SEP.join(parts[:cut]))
                b = self.right.parse_label(self.SEP.join(parts[cut:]))
            except ValueError:
                continue
            return (a, b)
        raise ValueError(f"bad tensor label {text!r}")

    def sort_key(self, label):
        return (self.left.sort_key(label[0]), self.right.sort_key(label[1]))

    def __repr__(self):
        return f"TensorAlgebra({self.left!r}, {self.right!r})"


def tensor(a: Algebra, b: Algebra) -> TensorAlgebra:
    return TensorAlgebra(a, b)


class StructureConstantAlgebra(Algebra):
    """Finite algebra given by an explicit multiplication table on string labels."""

    kind = "structure-constant"

    def __init__(self, basis: Sequence[str], table: Mapping[tuple, Iterable[tuple]],
                 unit: Mapping[str, Any]):
        super().__init__()
        self._basis = list(basis)
        known = set(self._basis)
        self.table = {}
        for (a, b), prods in table.items():
            prods = tuple((k, as_rational(c)) for k, c in prods if c != 0)
            for lab in (a, b, *(k for k, _ in prods)):
                if lab not in known:
                    raise ValueError(f"label {lab!r} not in basis")
            if prods:
                self.table[(a, b)] = prods
        self._unit = {k: as_rational(v) for k, v in unit.items() if v != 0}
        for lab in self._unit:
            if lab not in known:
                raise ValueError(f"unit label {lab!r} not in basis")

    def basis(self):
        return list(self._basis)

    def _mul_basis(self, a, b):
        return self.table.get((a, b), ())

    def unit_coeffs(self):
        return dict(self._unit)

    def parse_label(self, text):
        if text not in self._basis:
            raise ValueError(f"unknown label {text!r}")
        return text

    def sort_key(self, label):
        return self._basis.index(label)

    def corrupted(self, a: str, b: str, prods: Iterable[tuple]) -> "StructureConstantAlgebra":
        """Copy with the product ``a*b`` overwritten; for negative testing."""
        table = dict(self.table)
        table[(a, b)] = tuple(prods)
        return StructureConstantAlgebra(self._basis, table, self._unit)

    @classmethod
    def from_algebra(cls, alg: Algebra) -> "StructureConstantAlgebra":
        basis = alg.basis()
        if basis is None:
            raise ValueError("algebra is not finite-dimensional")
        names = {lab: alg.label_str(lab) for lab in basis}
        table = {}
        for a in basis:
            for b in basis:
                prods = alg.product(a, b)
                if prods:
                    table[(names[a], names[b])] = tuple((names[k], c) for k, c in prods)
        unit = {names[k]: v for k, v in alg.unit_coeffs().items()}
        return cls([names[b] for b in basis], table, unit)

    def to_json(self) -> dict:
        return {
            "dim": len(self._basis),
            "basis": list(self._basis),
            "unit": {k: format_rational(v) for k, v in self._unit.items()},
            "mul": [
                [a, b, [[k, format_rational(c)] for k, c in prods]]
                for (a, b), prods in sorted(
                    self.table.items(),
                    key=lambda kv: (self.sort_key(kv[0][0]), self.sort_key(kv[0][1])),
                )
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "StructureConstantAlgebra":
        dim = int(data["dim"])
        basis = [str(x) for x in data.get("basis", [str(k) for k in range(1, dim + 1)])]
        if len(basis) != dim or len(set(basis)) != dim:
            raise ValueError("basis must list dim distinct labels")
        table = {}
        for a, b, prods in data.get("mul", []):
            table[(str(a), str(b))] = tuple((str(k), as_rational(c)) for k, c in prods)
        return cls(basis, table, data["unit"])

    def __repr__(self):
        return f"StructureConstantAlgebra(dim={len(self._basis)})"


class CycleAlgebra(Algebra):
    """Monomials ``t^alpha s^beta u(i,j)``, ``alpha in {0,1}``, ``beta in 0..n``.

    Rules: ``u(i,j) u(k,l) = [j == k] u(i,l)``; ``t^2 = t``; ``s`` and ``t``
    commute with every ``u``; ``s t = 0`` while ``t s`` survives; and
    ``s^(n+1) = 0``.  Labels are tuples ``(alpha, beta, i, j)``.
    """

    kind = "cycle"

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("cycle algebra needs n >= 2")
        super().__init__()
        self.n = n

    @property
    def key(self):
        return ("cycle", self.n)

    def basis(self):
        r = range(1, self.n + 1)
        return [(a, b, i, j) for a in (0, 1) for b in range(self.n + 1) for i in r for j in r]

    def _mul_basis(self, x, y):
        a1, b1, i1, j1 = x
        a2, b2, i2, j2 = y
        if j1 != i2:
            return ()
        if b1 > 0 and a2 == 1:
            return ()  # s t = 0
        beta = b1 + b2
        if beta > self.n:
            return ()
        return (((a1 | a2, beta, i1, j2), 1),)

    def unit_coeffs(self):
        return {(0, 0, i, i): 1 for i in range(1, self.n + 1)}

    def t(self) -> AlgElement:
        return self.element({(1, 0, i, i): 1 for i in range(1, self.n + 1)})

    def s(self) -> AlgElement:
        return self.element({(0, 1, i, i): 1 for i in range(1, self.n + 1)})

    def u(self, i: int, j: int) -> AlgElement:
        return self.basis_element((0, 0, i, j))

    def su(self, i: int, j: int) -> AlgElement:
        return self.basis_element((0, 1, i, j))

    def label_str(self, label):
        a, b, i, j = label
        return f"t^{a}.s^{b}.u({i},{j})"

    def parse_label(self, text):
        try:
            tpart, spart, upart = text.strip().split(".")
            a = int(tpart[2:]) if tpart.startswith("t^") else None
            b = int(spart[2:]) if spart.startswith("s^") else None
            i, j = (int(x) for x in upart[2:-1].split(","))
        except Exception as exc:  # noqa: BLE001
            raise ValueError(f"bad cycle label {text!r}") from exc
        if a not in (0, 1) or b is None or not 0 <= b <= self.n:
            raise ValueError(f"bad cycle label {text!r}")
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"bad cycle label {text!r}")
        return (a, b, i, j)

    def __repr__(self):
        return f"CycleAlgebra({self.n})"


def cycle_algebra(n: int) -> CycleAlgebra:
    return CycleAlgebra(n)


def builtin_algebra(name: str) -> Algebra:
    """Parse ``"mat:2"``, ``"cycle:3"``, ``"free"``, ``"scalar"``; ``"|"`` tensors factors."""
    factors = [f.strip() for f in name.split("|")]
    algs = []
    for f in factors:
        kind, _, arg = f.partition(":")
        if kind == "mat":
            algs.append(matrix_algebra(int(arg)))
        elif kind == "cycle":
            algs.append(cycle_algebra(int(arg)))
        elif kind == "free" and not arg:
            algs.append(free_algebra())
        elif kind == "scalar" and not arg:
            algs.append(matrix_algebra(1))
        else:
            raise ValueError(f"unknown builtin algebra {f!r}")
    out = algs[-1]
    for a in reversed(algs[:-1]):
        out = tensor(a, out)
    return out


def algebra_from_json(spec) -> Algebra:
    if isinstance(spec, str):
        return builtin_algebra(spec)
    return StructureConstantAlgebra.from_json(spec)


# ----------------------------------------------------------------------------
# validation


@dataclass
class AlgebraReport:
    passed: bool
    checked: int
    exhaustive: bool
    witness: tuple | None = None
    message: str = ""

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "witness": None if self.witness is None else [str(w) for w in self.witness],
            "message": self.message,
        }


def _expand(alg: Algebra, terms: Mapping, b) -> dict:
    """Right-multiply a rational combination of labels by basis label ``b``."""
    out: dict = {}
    for a, c in terms.items():
        for k, s in alg.product(a, b):
            out[k] = out.get(k, 0) + c * s
    return {k: v for k, v in out.items() if v != 0}


def _expand_left(alg: Algebra, a, terms: Mapping) -> dict:
    out: dict = {}
    for b, c in terms.items():
        for k, s in alg.product(a, b):
            out[k] = out.get(k, 0) + c * s
    return {k: v for k, v in out.items() if v != 0}


def check_algebra(alg: Algebra, exhaustive_limit: int = 1000,
                  samples: int = 100_000, seed: int = 0) -> AlgebraReport:
    """Verify associativity on basis triples and the two unit laws."""
    basis = alg.basis()
    if basis is None:
        raise ValueError("check_algebra needs a finite-dimensional algebra")
    unit = alg.unit_coeffs()
    checked = 0
    for x in basis:
        ux = {}
        for u, c in unit.items():
            for k, s in alg.product(u, x):
                ux[k] = ux.get(k, 0) + c * s
        xu = {}
        for u, c in unit.items():
            for k, s in alg.product(x, u):
                xu[k] = xu.get(k, 0) + c * s
        ux = {k: v for k, v in ux.items() if v != 0}
        xu = {k: v for k, v in xu.items() if v != 0}
        checked += 1
        if ux != {x: 1} or xu != {x: 1}:
            return AlgebraReport(False, checked, True, (x,),
                                 f"unit law fails on {alg.label_str(x)}")
    exhaustive = len(basis) <= exhaustive_limit
    if exhaustive:
        triples: Iterable = itertools.product(basis, repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.choice(basis), rng.choice(basis), rng.choice(basis))
                   for _ in range(samples))
    for a, b, c in triples:
        checked += 1
        ab = {k: s for k, s in alg.product(a, b)}
        lhs = _expand(alg, ab, c)
        bc = {k: s for k, s in alg.product(b, c)}
        rhs = _expand_left(alg, a, bc)
        if lhs != rhs:
            names = tuple(alg.label_str(z) for z in (a, b, c))
            return AlgebraReport(False, checked, exhaustive, names,
                                 "associativity fails: (xy)z != x(yz)")
    return AlgebraReport(True, checked, exhaustive)


# ----------------------------------------------------------------------------
# concrete instantiation of the cycle algebra


@dataclass
class HomomorphismReport:
    passed: bool
    checked: int
    counterexample: tuple | None = None
    images: dict = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": None if self.counterexample is None
            else [str(x) for x in self.counterexample],
        }


def _unit_matrix(size: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((size, size), dtype=np.int64)
    e[i - 1, j - 1] = 1
    return e


def cycle_instantiation(n: int) -> dict:
    """Images of the cycle-algebra basis in ``Mat(Q,n+1) ⊗ Mat(Q,n)``.

    ``u(i,j) = I ⊗ e(i,j)``, ``s = (sum_i e(i,i+1)) ⊗ I``, ``t = e(1,1) ⊗ I``.
    """
    shift = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n):
        shift[i, i + 1] = 1
    t_left = _unit_matrix(n + 1, 1, 1)
    eye = np.eye(n + 1, dtype=np.int64)
    images = {}
    for alpha in (0, 1):
        for beta in range(n + 1):
            left = (t_left if alpha else eye) @ np.linalg.matrix_power(shift, beta)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    images[(alpha, beta, i, j)] = np.kron(left, _unit_matrix(n, i, j))
    return images


def instantiate_cycle_algebra(n: int, max_n: int = 6) -> HomomorphismReport:
    """Check ``phi(x) phi(y) == phi(x y)`` on every pair of basis labels."""
    if n > max_n:
        raise SizeCutoffError(f"n={n} exceeds instantiation bound {max_n}")
    alg = cycle_algebra(n)
    images = cycle_instantiation(n)
    size = (n + 1) * n
    zero = np.zeros((size, size), dtype=np.int64)
    checked = 0
    basis = alg.basis()
    for x in basis:
        for y in basis:
            checked += 1
            expect = zero.copy()
            for k, c in alg.product(x, y):
                expect = expect + int(c) * images[k]
            if not np.array_equal(images[x] @ images[y], expect):
                return HomomorphismReport(False, checked, (alg.label_str(x), alg.label_str(y)),
                                          images)
    return HomomorphismReport(True, checked, None, images)


def instantiate_element(x: AlgElement, images: Mapping) -> np.ndarray:
    """Concrete matrix of a cycle-algebra element (rational entries, object dtype)."""
    size = next(iter(images.values())).shape[0]
    out = np.zeros((size, size), dtype=object)
    for k, c in x.items():
        out = out + images[k].astype(object) * c
    return out
