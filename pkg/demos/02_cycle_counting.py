"""Counting Hamiltonian cycles and k-cycles through one sdet computation.

Run with ``python demos/02_cycle_counting.py``.
"""

import random

from symdet.cyclecount import (Graph, all_cycle_counts, brute_force_cycle_count,
                               hamiltonian_count)

for n in range(4, 8):
    G = Graph.complete(n)
    print(f"K_{n}: {hamiltonian_count(G)} Hamiltonian cycles "
          f"(brute force {brute_force_cycle_count(G, n)})")

# A random graph: every cycle length at once, checked against backtracking.
G = Graph.random(6, 0.5, random.Random(3))
print("random G(6, 0.5) edges:", G.edge_list())
counts = all_cycle_counts(G)
for k, value in sorted(counts.items()):
    print(f"  {k}-cycles: {value}  (brute force {brute_force_cycle_count(G, k)})")
