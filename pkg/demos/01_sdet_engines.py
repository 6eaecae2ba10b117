"""Symmetrized determinants over a few algebras, computed three ways.

Run with ``python demos/01_sdet_engines.py``.
"""

import random

from symdet.algebra import builtin_algebra
from symdet.sampling import random_matrix
from symdet.sdet import AlgMatrix, pme_sum, sdet_by_rows, sdet_fast, sdet_naive

rng = random.Random(0)

# Over 2x2 rational matrices the three engines must agree exactly.
mat2 = builtin_algebra("mat:2")
M = random_matrix(mat2, 3, rng)
a, b, c = sdet_naive(M), sdet_by_rows(M), sdet_fast(M)
print("Mat(Q,2), n=3")
print("  naive == by_rows == fast:", a == b == c)
print("  sdet =", a.to_json())

# Principal minor expansion: sdet(M + I) is the sum of sdets of all
# principal submatrices, the empty one contributing 1.
cyc = builtin_algebra("cycle:3")
A = random_matrix(cyc, 3, rng)
lhs = sdet_fast(A + AlgMatrix.identity(cyc, 3))
rhs = pme_sum(A)
print("cycle algebra, n=3: sdet(A+I) == principal minor sum:", lhs == rhs)
print("  number of nonzero basis coefficients:", len(lhs.to_json()))
