"""Exact rationals and permutation combinatorics.

Rationals are :class:`fractions.Fraction` values (or plain ``int`` where the
denominator is 1; both compare and hash equal).  Permutations are tuples of
1-indexed images, ``p[i - 1] == p(i)``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Rational = Union[int, Fraction]
Permutation = tuple


class SymdetError(Exception):
    """Base class for library errors."""


class SizeCutoffError(SymdetError):
    """Input exceeds a configured size bound."""


class InvariantError(SymdetError):
    """An internal consistency check failed."""


def as_rational(value) -> Rational:
    """Coerce ``value`` to an exact rational (``int`` when integral)."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = Fraction(value.strip())
    elif isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    else:
        value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def format_rational(value: Rational) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Rational:
    return as_rational(text)


def validate_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of 1..n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``(p o q)(i) = p(q(i))``."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, pi in enumerate(p, start=1):
        inv[pi - 1] = i
    return tuple(inv)


def inversion_count(p: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``p(i) > p(j)``."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def sign(p: Sequence[int]) -> int:
    return -1 if inversion_count(p) % 2 else 1


def mixed_inversion_count(p: Sequence[int], subset: Iterable[int]) -> int:
    """Inversions of ``p`` between one index in ``subset`` and one outside it.

    Counts pairs ``(i in S, j not in S)`` with ``i < j, p(i) > p(j)`` or
    ``i > j, p(i) < p(j)``.
    """
    inside = set(subset)
    n = len(p)
    count = 0
    for i in inside:
        for j in range(1, n + 1):
            if j in inside:
                continue
            if (i < j and p[i - 1] > p[j - 1]) or (i > j and p[i - 1] < p[j - 1]):
                count += 1
    return count


def cycle_type(p: Sequence[int]) -> list[int]:
    """Sorted cycle lengths of ``p`` (fixed points included as 1s)."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i] - 1
            length += 1
        lengths.append(length)
    return sorted(lengths)


def factorial(n: int) -> int:
    return math.factorial(n)
