"""The commutative sdet family and its closed-form coefficients.

The closed form K (n-2)!/n! sgn(alpha) reproduces every coefficient at n=2.
From n=3 on it disagrees with the expansion, because it treats the interior
factors as freely orderable when their indices must chain.  ``family_monomial_coeff_exact``
counts the admissible orderings instead and matches the expansion.

Run with ``python demos/04_family_coefficients.py``.
"""

from fractions import Fraction

from symdet.acceptance import FAMILY_INSTANCES
from symdet.vnpred import (FamilyMonomial, family_monomial_coeff,
                           family_monomial_coeff_exact, sdet_family)

T = sdet_family(2, 2)
print("m=2, n=2 grid:")
for k, row in enumerate(T, start=1):
    for l, poly in enumerate(row, start=1):
        print(f"  t_{k},{l} = {poly}")

for m, n in FAMILY_INSTANCES:
    T = sdet_family(m, n)
    total = closed_ok = exact_ok = 0
    for k in range(1, m + 1):
        for l in range(1, m + 1):
            for key, c in T[k - 1][l - 1].items():
                mono = FamilyMonomial.from_cpoly_key(key)
                total += 1
                closed_ok += family_monomial_coeff(mono, k, l, n) == Fraction(c)
                exact_ok += family_monomial_coeff_exact(mono, k, l, n) == Fraction(c)
    print(f"m={m}, n={n}: {total} coefficients, closed form right on {closed_ok}, "
          f"ordering count right on {exact_ok}")

mono = FamilyMonomial(((1, 1, 1, 1), (2, 2, 1, 2), (3, 3, 2, 1)))
print("smallest disagreement, factors", mono.factors)
print("  closed form:", family_monomial_coeff(mono, 1, 1, 3),
      " expansion:", family_monomial_coeff_exact(mono, 1, 1, 3))
