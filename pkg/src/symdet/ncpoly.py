"""Free noncommutative and commutative polynomials with rational coefficients.

``NCPoly`` keys are words (tuples of variable names, order significant);
``CPoly`` keys are sorted tuples of ``(name, exponent)`` pairs.  Both are
immutable, drop zero coefficients, and interoperate with plain rationals so
they can serve as the coefficient ring of an algebra.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import Rational, SymdetError, as_rational, format_rational

Word = tuple

#: Products producing words longer than this raise :class:`DegreeError`.
MAX_WORD_LENGTH = 64

#: Entry bound for random substitution matrices.
PIT_ENTRY_BOUND = 10**6


class DegreeError(SymdetError):
    pass


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


class NCPoly:
    """Element of the free associative algebra over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Rational] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    # constructors

    @classmethod
    def var(cls, name: str) -> "NCPoly":
        if not name:
            raise ValueError("variable name must be nonempty")
        return cls({(name,): 1})

    @classmethod
    def const(cls, c) -> "NCPoly":
        return cls({(): as_rational(c)})

    @classmethod
    def word(cls, names: Sequence[str], coeff=1) -> "NCPoly":
        return cls({tuple(names): as_rational(coeff)})

    @classmethod
    def lift(cls, x) -> "NCPoly":
        if isinstance(x, NCPoly):
            return x
        if _is_scalar(x):
            return cls({(): x})
        raise TypeError(f"cannot lift {type(x).__name__} to NCPoly")

    # inspection

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def coeff(self, word: Sequence[str]) -> Rational:
        return self._terms.get(tuple(word), 0)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def variables(self) -> set:
        return {v for w in self._terms for v in w}

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic

    def __add__(self, other):
        if _is_scalar(other):
            other = NCPoly({(): other})
        elif not isinstance(other, NCPoly):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, NCPoly):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return NCPoly()
            return NCPoly({w: c * other for w, c in self._terms.items()})
        if not isinstance(other, NCPoly):
            return NotImplemented
        out: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                if len(w) > MAX_WORD_LENGTH:
                    raise DegreeError(
                        f"word length {len(w)} exceeds bound {MAX_WORD_LENGTH}"
                    )
                out[w] = out.get(w, 0) + c1 * c2
        return NCPoly(out)

    def __rmul__(self, other):
        # only scalars reach here; they commute with everything
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = NCPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if _is_scalar(other):
            other = NCPoly.lift(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def subs(self, name: str, value) -> "NCPoly":
        """Substitute a rational for one variable."""
        value = as_rational(value)
        out: dict = {}
        for w, c in self._terms.items():
            kept = tuple(v for v in w if v != name)
            out[kept] = out.get(kept, 0) + c * value ** (len(w) - len(kept))
        return NCPoly(out)

    def __repr__(self):
        if not self._terms:
            return "NCPoly(0)"
        parts = []
        for w, c in self.items():
            mono = "*".join(w) if w else "1"
            parts.append(f"{format_rational(c)}*{mono}" if c != 1 else mono)
        return "NCPoly(" + " + ".join(parts) + ")"

    # serialization

    def to_json(self) -> list:
        return [[format_rational(c), list(w)] for w, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "NCPoly":
        out: dict = {}
        for coef, word in data:
            w = tuple(word)
            out[w] = out.get(w, 0) + as_rational(coef)
        return cls(out)


def nc_arith(op: str, *args):
    """Dispatch ``add``/``mul`` over polynomials, or ``coeff`` (poly, word)."""
    if op == "add":
        out = NCPoly()
        for a in args:
            out = out + a
        return out
    if op == "mul":
        out = NCPoly.const(1)
        for a in args:
            out = out * a
        return out
    if op == "coeff":
        poly, word = args
        return poly.coeff(word)
    raise ValueError(f"unknown op {op!r}")


def _mono_key(exponents: Mapping[str, int]) -> tuple:
    return tuple(sorted((v, e) for v, e in exponents.items() if e))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return _mono_key(exps)


class CPoly:
    """Commutative polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Rational] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def var(cls, name: str) -> "CPoly":
        if not name:
            raise ValueError("variable name must be nonempty")
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "CPoly":
        return cls({(): as_rational(c)})

    @classmethod
    def lift(cls, x) -> "CPoly":
        if isinstance(x, CPoly):
            return x
        if _is_scalar(x):
            return cls({(): x})
        raise TypeError(f"cannot lift {type(x).__name__} to CPoly")

    @classmethod
    def monomial(cls, names: Iterable[str], coeff=1) -> "CPoly":
        exps: dict = {}
        for v in names:
            exps[v] = exps.get(v, 0) + 1
        return cls({_mono_key(exps): as_rational(coeff)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, monomial) -> Rational:
        """Coefficient of a monomial given as a key or as a list of names."""
        if monomial and isinstance(monomial[0], str):
            exps: dict = {}
            for v in monomial:
                exps[v] = exps.get(v, 0) + 1
            monomial = _mono_key(exps)
        return self._terms.get(tuple(monomial), 0)

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if _is_scalar(other):
            other = CPoly({(): other})
        elif not isinstance(other, CPoly):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return CPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return CPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, CPoly):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return CPoly()
            return CPoly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, CPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return CPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if _is_scalar(other):
            other = CPoly({(): other})
        if not isinstance(other, CPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "CPoly(0)"
        parts = []
        for m, c in self.items():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m) or "1"
            parts.append(f"{format_rational(c)}*{mono}" if c != 1 else mono)
        return "CPoly(" + " + ".join(parts) + ")"

    def to_json(self) -> list:
        """Same layout as NCPoly; a monomial lists each variable once per power."""
        return [
            [format_rational(c), [v for v, e in m for _ in range(e)]]
            for m, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable) -> "CPoly":
        out = CPoly()
        for coef, names in data:
            out = out + CPoly.monomial(names, coef)
        return out


def commutative_image(p: NCPoly) -> CPoly:
    """Forget the order of letters in every word."""
    out: dict = {}
    for w, c in p._terms.items():
        exps: dict = {}
        for v in w:
            exps[v] = exps.get(v, 0) + 1
        key = _mono_key(exps)
        out[key] = out.get(key, 0) + c
    return CPoly(out)


def substitution_matrix(name: str, size: int, seed: int) -> np.ndarray:
    """Deterministic random integer matrix standing in for variable ``name``."""
    rng = random.Random(f"{seed}/{size}/{name}")
    b = PIT_ENTRY_BOUND
    data = [[rng.randint(-b, b) for _ in range(size)] for _ in range(size)]
    return np.array(data, dtype=object)


def pit_matrix_eval(p: NCPoly, substitution_size: int, seed: int = 0) -> np.ndarray:
    """Evaluate ``p`` at random integer matrices (exact, object dtype)."""
    if substitution_size < 2:
        raise ValueError("substitution_size must be at least 2")
    size = substitution_size
    mats: dict = {}
    result = np.zeros((size, size), dtype=object)
    eye = np.array(
        [[int(i == j) for j in range(size)] for i in range(size)], dtype=object
    )
    for w, c in p._terms.items():
        term = eye
        for v in w:
            if v not in mats:
                mats[v] = substitution_matrix(v, size, seed)
            term = term.dot(mats[v])
        result = result + term * c
    return result


def pit_equal(p: NCPoly, q: NCPoly, substitution_size: int | None = None,
              seeds: Sequence[int] = (0, 1, 2)) -> bool:
    """Probabilistic equality via matrix substitution on several seeds."""
    if substitution_size is None:
        substitution_size = max(2, max(p.degree(), q.degree()) // 2 + 1)
    diff = p - q
    for seed in seeds:
        if np.any(pit_matrix_eval(diff, substitution_size, seed) != 0):
            return False
    return True
