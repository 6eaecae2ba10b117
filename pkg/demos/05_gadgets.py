"""Formulas to Hamiltonian cycles: layered DAGs, rosettes, glue, boolean sums.

Run with ``python demos/05_gadgets.py``.
"""

import random

from symdet.gadgets import (Add, Mul, Var, boolean_sum, boolean_sum_pipeline,
                            enumerate_hc_poly, formula_to_hc_graph, glue,
                            predicted_glue_image, random_host_graph, rosette_path_census)

# x*(y + z)*x, order preserved.
f = Mul((Var("x"), Add((Var("y"), Var("z"))), Var("x")))
G = formula_to_hc_graph(f)
print(f"formula graph: {len(G.vertices)} vertices, HC polynomial {enumerate_hc_poly(G)}")
print("  equals the formula:", enumerate_hc_poly(G) == f.to_ncpoly())

for i in range(2, 5):
    census = rosette_path_census(i)
    print(f"rosette i={i}: {census[frozenset()]} indicator-free paths, "
          f"{len(census) - 1} indicator subsets each hit "
          f"{sorted(set(v for s, v in census.items() if s))} time(s)")

H = random_host_graph(random.Random(1), 6)
e1, e2 = sorted(e for e in H.edges if e != (H.sink, H.start))[:2]
glued = glue(H, e1, e2)
print(f"glue {e1} with {e2}: {len(glued.vertices)} vertices, both-or-neither holds:",
      enumerate_hc_poly(glued) == predicted_glue_image(H, e1, e2))

# Summing x over {0,1} needs a rosette because x occurs twice; y occurs once.
G = boolean_sum_pipeline(f, ["x", "y"])
# The graph is past the default enumeration bound, so lift it explicitly.
hc = enumerate_hc_poly(G, limit=None)
print(f"boolean sum over x, y: {len(G.vertices)} vertices, HC polynomial {hc}")
print("  equals the direct sum:", hc == boolean_sum(f.to_ncpoly(), ["x", "y"]))
