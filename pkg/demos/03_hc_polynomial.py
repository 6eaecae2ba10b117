"""Reading the noncommutative Hamiltonian-cycle polynomial off an sdet.

Run with ``python demos/03_hc_polynomial.py``.
"""

from symdet.cyclecount import Graph
from symdet.vnpred import extract_hc, hc_direct

G = Graph.complete(4, directed=True)
hc = extract_hc(G)
print("directed K_4, words in the extracted polynomial:", len(hc))
for coeff, word in hc.to_json():
    print(f"  {coeff} * {' '.join(word)}")
print("matches direct enumeration:", hc == hc_direct(G))

# A directed 4-cycle plus one chord has a single Hamiltonian cycle.
G = Graph.directed_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
print("4-cycle with a chord:", extract_hc(G).to_json())
