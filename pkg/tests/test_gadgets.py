import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symdet.core import SizeCutoffError
from symdet.gadgets import (FIGURE_GLUE_INTERNAL_EDGES, Add, Const, Mul, Var, WeightedDigraph,
                            boolean_sum, boolean_sum_pipeline, dag_to_hc_graph,
                            enumerate_hc_poly, formula_from_json, formula_to_hc_graph,
                            formula_to_layered_dag, glue, hamiltonian_paths,
                            predicted_glue_image, random_formula, random_host_graph, rosette,
                            rosette_path_census, single_occurrence_boolean_sum)
from symdet.ncpoly import NCPoly

x, y, z, w = Var("x"), Var("y"), Var("z"), Var("w")
P = NCPoly.var


def cycle_graph(weights):
    n = len(weights)
    G = WeightedDigraph(list(range(n)), {}, 0, n - 1)
    for k, wt in enumerate(weights):
        G.add_edge(k, (k + 1) % n, wt)
    return G


# formulas and DAGs


def test_dag_shapes():
    d = formula_to_layered_dag(x)
    assert d.depth == 1 and d.path_sum() == P("x")
    d = formula_to_layered_dag(Mul((x, y)))
    assert d.depth == 2 and d.path_sum() == P("x") * P("y")
    d = formula_to_layered_dag(Add((x, y)))
    assert d.depth == 2 and len(d.layers[1]) == 2 and len(d.edges) == 4


def test_source_and_sink_degrees():
    d = formula_to_layered_dag(Add((Mul((x, y)), z, Mul((y, Add((x, w)))))))
    assert all(v != d.source for (_, v) in d.edges)
    assert all(u != d.sink for (u, _) in d.edges)


@given(st.integers(0, 10**6))
def test_path_sum_fidelity(seed):
    f = random_formula(random.Random(seed), ["x", "y", "z"], 4)
    d = formula_to_layered_dag(f)
    assert d.path_sum() == f.to_ncpoly()


@given(st.integers(0, 10**6))
def test_hc_graph_preserves_paths(seed):
    f = random_formula(random.Random(seed), ["x", "y", "z"], 4)
    d = formula_to_layered_dag(f)
    G = dag_to_hc_graph(d)
    if len(G.vertices) <= 16:
        assert enumerate_hc_poly(G) == d.path_sum()


def test_hc_graph_examples():
    assert enumerate_hc_poly(formula_to_hc_graph(Mul((x, y, z)))) == \
        NCPoly.word(["x", "y", "z"])
    assert len(enumerate_hc_poly(formula_to_hc_graph(Add((x, y))))) == 2
    assert enumerate_hc_poly(formula_to_hc_graph(Const(Fraction(3, 4)))) == \
        NCPoly.const(Fraction(3, 4))


def test_formula_json_round_trip():
    f = Add((Mul((x, Const(Fraction(-1, 2)), y)), z))
    data = f.to_json()
    assert data["op"] == "add" and data["args"][0]["args"][1] == {"const": "-1/2"}
    assert formula_from_json(data) == f
    with pytest.raises(ValueError):
        formula_from_json({"op": "sub", "args": []})


# enumeration oracle


def test_enumeration_examples():
    assert enumerate_hc_poly(cycle_graph(["a", "b", "c"])) == NCPoly.word(["a", "b", "c"])
    K3 = WeightedDigraph([1, 2, 3], {}, 1)
    for u, v in itertools.permutations([1, 2, 3], 2):
        K3.add_edge(u, v, f"x_{u}_{v}")
    assert len(enumerate_hc_poly(K3)) == 2
    d = formula_to_layered_dag(Mul((x, y)))
    open_graph = WeightedDigraph(d.vertices(), dict(d.edges), d.source, d.sink)
    assert enumerate_hc_poly(open_graph).is_zero()


def test_enumeration_bound():
    G = cycle_graph(["a"] * 25)
    with pytest.raises(SizeCutoffError):
        enumerate_hc_poly(G)
    assert enumerate_hc_poly(G, limit=None) == NCPoly.word(["a"] * 25)


# rosette


@pytest.mark.parametrize("i", [2, 3, 4, 5])
def test_rosette_census(i):
    census = rosette_path_census(i)
    assert census.pop(frozenset()) == 2
    assert len(census) == 2 ** i - 1 and set(census.values()) == {1}
    assert len(rosette(i).vertices) == 3 * i + 1


def test_rosette_forward_and_backward_paths():
    R = rosette(3, tag="R")
    paths = [p for p in hamiltonian_paths(R, R.start, R.sink)
             if not any(e in R.indicators for e in zip(p, p[1:]))]
    names = sorted(tuple(v[1:] for v in p) for p in paths)
    forward = (("s",), ("in", 1), ("out", 1), ("b", 1), ("in", 2), ("out", 2), ("b", 2),
               ("in", 3), ("out", 3), ("t",))
    assert forward in names


def test_rosette_needs_two():
    with pytest.raises(ValueError):
        rosette(1)


# glue


def four_cycle():
    return cycle_graph(["a", "b", "c", 1])


def test_glue_both_edges_used():
    H = four_cycle()
    G = glue(H, (0, 1), (2, 3))
    assert enumerate_hc_poly(G) == NCPoly.word(["b"])


def test_glue_neither_edge_used():
    H = four_cycle()
    H.add_edge(0, 2, "p")
    H.add_edge(2, 1, "q")
    H.add_edge(1, 3, "r")
    G = glue(H, (0, 1), (2, 3))
    # 0->2->1->3 avoids both; 0->1->2->3 uses both
    assert enumerate_hc_poly(G) == NCPoly.word(["p", "q", "r"]) + NCPoly.word(["b"])


def test_glue_exactly_one_edge_used():
    H = four_cycle()
    H.add_edge(0, 2, "p")
    H.add_edge(2, 1, "q")
    H.add_edge(1, 3, "r")
    G = glue(H, (0, 2), (1, 2))
    # 0->2->1->3 uses (0,2) but not (1,2); 0->1->2->3 uses (1,2) only
    assert enumerate_hc_poly(G).is_zero()


def test_glue_errors():
    H = four_cycle()
    with pytest.raises(KeyError):
        glue(H, (0, 2), (1, 2))
    with pytest.raises(ValueError):
        glue(H, (0, 1), (0, 1))
    with pytest.raises(ValueError):
        glue(H, (0, 1), (3, 0))


def test_glue_on_random_hosts():
    rng = random.Random(7)
    for _ in range(10):
        H = random_host_graph(rng, rng.randint(4, 8))
        e1, e2 = rng.sample(sorted(e for e in H.edges if e != (H.sink, H.start)), 2)
        assert enumerate_hc_poly(glue(H, e1, e2)) == predicted_glue_image(H, e1, e2)


def test_figure_edge_c_to_f_breaks_the_gadget():
    # with c -> f a cycle can enter at u and leave at v', using neither glued edge's
    # proper exits, which the corrected edge set rules out
    rng = random.Random(5)
    broken = 0
    for _ in range(20):
        H = random_host_graph(rng, rng.randint(4, 8))
        e1, e2 = rng.sample(sorted(e for e in H.edges if e != (H.sink, H.start)), 2)
        G = glue(H, e1, e2, internal_edges=FIGURE_GLUE_INTERNAL_EDGES)
        broken += enumerate_hc_poly(G) != predicted_glue_image(H, e1, e2)
    assert broken > 0


# boolean sums


def layered_cycle(f):
    return formula_to_hc_graph(f)


def test_single_occurrence_examples():
    G = layered_cycle(Mul((y, w)))
    assert enumerate_hc_poly(single_occurrence_boolean_sum(G, "y")) == P("w")
    G = layered_cycle(Add((Mul((y, x)), w)))
    out = single_occurrence_boolean_sum(G, "y")
    assert enumerate_hc_poly(out) == P("x") + P("w") * 2


def test_single_occurrence_without_y_on_cycle_doubles():
    # the y edge only lies on a zero-weight route, so no cycle carries y
    G = layered_cycle(Add((Mul((w, x)), Mul((y, Const(0))))))
    assert enumerate_hc_poly(G) == P("w") * P("x")
    assert enumerate_hc_poly(single_occurrence_boolean_sum(G, "y")) == P("w") * P("x") * 2


def test_single_occurrence_errors():
    G = layered_cycle(Mul((y, x, y)))
    with pytest.raises(ValueError):
        single_occurrence_boolean_sum(G, "y")
    with pytest.raises(ValueError):
        single_occurrence_boolean_sum(G, "z")


@pytest.mark.parametrize("f, summed, expect", [
    (Mul((x, y)), ["y"], P("x")),
    (Add((x, y)), ["y"], P("x") * 2 + 1),
    (x, [], P("x")),
])
def test_pipeline_examples(f, summed, expect):
    assert enumerate_hc_poly(boolean_sum_pipeline(f, summed)) == expect


def test_pipeline_with_rosette():
    f = Mul((y, x, y))
    G = boolean_sum_pipeline(f, ["y"])
    assert len(G.vertices) > 24
    assert enumerate_hc_poly(G, limit=None) == boolean_sum(f.to_ncpoly(), ["y"])


def test_pipeline_keeps_doubling_weight_through_glue():
    # z is doubled first; the boundary it doubles also holds a y occurrence
    f = Add((Mul((y, x, y)), Mul((z, x))))
    G = boolean_sum_pipeline(f, ["y", "z"])
    assert enumerate_hc_poly(G, limit=None) == boolean_sum(f.to_ncpoly(), ["y", "z"])


def test_pipeline_rejects_absent_variable():
    with pytest.raises(ValueError):
        boolean_sum_pipeline(Mul((x, y)), ["z"])


def test_weighted_digraph_json_round_trip():
    G = boolean_sum_pipeline(Add((x, y)), ["y"])
    data = G.to_json()
    again = WeightedDigraph.from_json(data)
    assert again.to_json() == data
    assert enumerate_hc_poly(again) == enumerate_hc_poly(G)
    R = rosette(2)
    data = R.to_json()
    assert sorted(data["indicators"].values()) == [1, 2]
    assert WeightedDigraph.from_json(data).to_json() == data
