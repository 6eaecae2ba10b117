"""Graph gadgets that turn formulas and boolean sums into Hamiltonian cycles.

Pipeline: a formula becomes a layered DAG whose ordered ``s -> t`` path sum
is the formula; the DAG becomes a digraph whose Hamiltonian cycles (read
from ``s``) are those paths; boolean sums over a variable are simulated by a
doubling trick when the variable labels one edge, or by a rosette whose
indicator edges are glued to the variable's occurrences.

Edge weights are :class:`NCPoly` values; a cycle's weight is the ordered
product of its edge weights starting at the distinguished start vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterator, Mapping, Sequence

import numpy as np

from .core import SizeCutoffError, as_rational, format_rational
from .ncpoly import NCPoly, pit_matrix_eval

Vertex = Hashable
Edge = tuple

ENUMERATION_LIMIT = 24


# ----------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Var:
    name: str

    def to_ncpoly(self) -> NCPoly:
        return NCPoly.var(self.name)

    def to_json(self):
        return {"var": self.name}

    def gates(self) -> int:
        return 0


@dataclass(frozen=True)
class Const:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_rational(self.value))

    def to_ncpoly(self) -> NCPoly:
        return NCPoly.const(self.value)

    def to_json(self):
        return {"const": format_rational(self.value)}

    def gates(self) -> int:
        return 0


@dataclass(frozen=True)
class Add:
    args: tuple

    def __post_init__(self):
        if not self.args:
            raise ValueError("add needs at least one argument")
        object.__setattr__(self, "args", tuple(self.args))

    def to_ncpoly(self) -> NCPoly:
        out = NCPoly()
        for a in self.args:
            out = out + a.to_ncpoly()
        return out

    def to_json(self):
        return {"op": "add", "args": [a.to_json() for a in self.args]}

    def gates(self) -> int:
        return 1 + sum(a.gates() for a in self.args)


@dataclass(frozen=True)
class Mul:
    """Ordered product; argument order is multiplication order."""

    args: tuple

    def __post_init__(self):
        if not self.args:
            raise ValueError("mul needs at least one argument")
        object.__setattr__(self, "args", tuple(self.args))

    def to_ncpoly(self) -> NCPoly:
        out = NCPoly.const(1)
        for a in self.args:
            out = out * a.to_ncpoly()
        return out

    def to_json(self):
        return {"op": "mul", "args": [a.to_json() for a in self.args]}

    def gates(self) -> int:
        return 1 + sum(a.gates() for a in self.args)


Formula = Var | Const | Add | Mul


def formula_from_json(data: Mapping) -> Formula:
    if "var" in data:
        return Var(str(data["var"]))
    if "const" in data:
        return Const(as_rational(data["const"]))
    op = data.get("op")
    args = tuple(formula_from_json(a) for a in data.get("args", []))
    if op == "add":
        return Add(args)
    if op == "mul":
        return Mul(args)
    raise ValueError(f"bad formula node {data!r}")


def formula_variables(f: Formula) -> list:
    if isinstance(f, Var):
        return [f.name]
    if isinstance(f, Const):
        return []
    seen: list = []
    for a in f.args:
        for v in formula_variables(a):
            if v not in seen:
                seen.append(v)
    return seen


def boolean_sum(p: NCPoly, summed: Sequence[str]) -> NCPoly:
    """``sum over a in {0,1}^k`` of ``p`` with the summed variables set to ``a``."""
    out = NCPoly()
    for bits in itertools.product((0, 1), repeat=len(summed)):
        q = p
        for name, b in zip(summed, bits):
            q = q.subs(name, b)
        out = out + q
    return out


# ----------------------------------------------------------------------------
# layered DAGs


def _weight(x) -> NCPoly:
    if isinstance(x, NCPoly):
        return x
    if isinstance(x, str):
        return NCPoly.var(x)
    return NCPoly.const(x)


@dataclass
class LayeredDAG:
    layers: list
    edges: dict

    @property
    def source(self):
        return self.layers[0][0]

    @property
    def sink(self):
        return self.layers[-1][0]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def layer_of(self) -> dict:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    def vertices(self) -> list:
        return [v for layer in self.layers for v in layer]

    def validate(self) -> None:
        if len(self.layers[0]) != 1 or len(self.layers[-1]) != 1:
            raise ValueError("first and last layers must be singletons")
        where = self.layer_of()
        for (u, v) in self.edges:
            if where[v] != where[u] + 1:
                raise ValueError(f"edge {u}->{v} does not cross exactly one layer")

    def path_sum(self) -> NCPoly:
        """Sum over ``s -> t`` paths of the ordered product of edge weights."""
        reach = {self.source: NCPoly.const(1)}
        out_edges: dict = {}
        for (u, v), w in self.edges.items():
            out_edges.setdefault(u, []).append((v, w))
        for layer in self.layers[:-1]:
            for u in layer:
                if u not in reach:
                    continue
                for v, w in out_edges.get(u, []):
                    reach[v] = reach.get(v, NCPoly()) + reach[u] * w
        return reach.get(self.sink, NCPoly())


class _Fresh:
    def __init__(self):
        self.k = 0

    def __call__(self):
        self.k += 1
        return self.k


def _pad_end(d: LayeredDAG, fresh: _Fresh) -> LayeredDAG:
    t2 = fresh()
    edges = dict(d.edges)
    edges[(d.sink, t2)] = NCPoly.const(1)
    return LayeredDAG(d.layers + [[t2]], edges)


def _rename(d: LayeredDAG, mapping: Mapping) -> LayeredDAG:
    r = lambda v: mapping.get(v, v)  # noqa: E731
    return LayeredDAG([[r(v) for v in layer] for layer in d.layers],
                      {(r(u), r(v)): w for (u, v), w in d.edges.items()})


def _build(f: Formula, fresh: _Fresh) -> LayeredDAG:
    if isinstance(f, (Var, Const)):
        s, t = fresh(), fresh()
        return LayeredDAG([[s], [t]], {(s, t): f.to_ncpoly()})
    parts = [_build(a, fresh) for a in f.args]
    if len(parts) == 1:
        return parts[0]
    if isinstance(f, Mul):
        out = parts[0]
        for nxt in parts[1:]:
            nxt = _rename(nxt, {nxt.source: out.sink})
            edges = dict(out.edges)
            edges.update(nxt.edges)
            out = LayeredDAG(out.layers + nxt.layers[1:], edges)
        return out
    # Add: equal depths >= 2, then share source and sink
    depth = max(2, max(p.depth for p in parts))
    padded = []
    for p in parts:
        while p.depth < depth:
            p = _pad_end(p, fresh)
        padded.append(p)
    s, t = fresh(), fresh()
    layers = [[s]] + [[] for _ in range(depth - 1)] + [[t]]
    edges: dict = {}
    for p in padded:
        p = _rename(p, {p.source: s, p.sink: t})
        for i in range(1, depth):
            layers[i].extend(p.layers[i])
        edges.update(p.edges)
    return LayeredDAG(layers, edges)


def formula_to_layered_dag(f: Formula) -> LayeredDAG:
    """Series/parallel DAG whose ordered path sum equals ``f``.

    Vertices are renumbered ``0..N-1`` layer by layer; ``0`` is the source.
    """
    d = _build(f, _Fresh())
    order = {v: k for k, v in enumerate(d.vertices())}
    d = _rename(d, order)
    d.validate()
    return d


# ----------------------------------------------------------------------------
# weighted digraphs and Hamiltonian-cycle enumeration


@dataclass
class WeightedDigraph:
    vertices: list
    edges: dict
    start: Vertex
    sink: Vertex | None = None
    indicators: dict = field(default_factory=dict)
    layers: list | None = None

    def copy(self) -> "WeightedDigraph":
        return WeightedDigraph(list(self.vertices), dict(self.edges), self.start, self.sink,
                               dict(self.indicators),
                               None if self.layers is None else [list(l) for l in self.layers])

    def add_edge(self, u, v, weight=1) -> None:
        if u == v:
            raise ValueError("self-loops are not allowed")
        if (u, v) in self.edges:
            raise ValueError(f"duplicate edge {u}->{v}")
        self.edges[(u, v)] = _weight(weight)

    def remove_edge(self, u, v) -> NCPoly:
        self.indicators.pop((u, v), None)
        return self.edges.pop((u, v))

    def merge(self, other: "WeightedDigraph") -> None:
        clash = set(self.vertices) & set(other.vertices)
        if clash:
            raise ValueError(f"vertex names collide: {sorted(map(str, clash))[:3]}")
        self.vertices.extend(other.vertices)
        self.edges.update(other.edges)
        self.indicators.update(other.indicators)

    def out_neighbors(self) -> dict:
        out = {v: [] for v in self.vertices}
        for (u, v) in self.edges:
            out[u].append(v)
        return out

    def in_neighbors(self) -> dict:
        inn = {v: [] for v in self.vertices}
        for (u, v) in self.edges:
            inn[v].append(u)
        return inn

    def to_json(self) -> dict:
        """Graph file layout: vertices numbered ``1..n`` in list order."""
        index = {v: k for k, v in enumerate(self.vertices, start=1)}
        edges = sorted((index[u], index[v]) for (u, v) in self.edges)
        inv = {i: v for v, i in index.items()}
        return {
            "n": len(self.vertices),
            "directed": True,
            "edges": [list(e) for e in edges],
            "weights": {f"{u},{v}": self.edges[(inv[u], inv[v])].to_json() for u, v in edges},
            "labels": [_vertex_name(v) for v in self.vertices],
            "start": index[self.start],
            "sink": None if self.sink is None else index[self.sink],
            "indicators": {f"{index[u]},{index[v]}": k
                           for (u, v), k in sorted(self.indicators.items(), key=lambda kv: kv[1])},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "WeightedDigraph":
        n = int(data["n"])
        labels = data.get("labels") or [str(k) for k in range(1, n + 1)]
        vert = {k: labels[k - 1] for k in range(1, n + 1)}
        weights = data.get("weights", {})
        edges = {}
        for u, v in data["edges"]:
            w = weights.get(f"{u},{v}")
            edges[(vert[u], vert[v])] = NCPoly.const(1) if w is None else NCPoly.from_json(w)
        indicators = {}
        for key, k in data.get("indicators", {}).items():
            u, v = (int(x) for x in key.split(","))
            indicators[(vert[u], vert[v])] = int(k)
        sink = data.get("sink")
        return cls([vert[k] for k in range(1, n + 1)], edges, vert[int(data.get("start", 1))],
                   None if sink is None else vert[int(sink)], indicators)


def _vertex_name(v) -> str:
    if isinstance(v, tuple):
        return ":".join(str(x) for x in v)
    return str(v)


def _hamiltonian_walks(G: WeightedDigraph, source, target=None, limit=ENUMERATION_LIMIT,
                       ) -> Iterator[list]:
    """Vertex sequences from ``source`` covering every vertex once.

    With ``target=None`` the sequence must close back to ``source`` by an
    edge (a Hamiltonian cycle); otherwise it must end at ``target``.
    """
    n = len(G.vertices)
    if limit is not None and n > limit:
        raise SizeCutoffError(f"{n} vertices exceeds enumeration bound {limit}")
    idx = {v: k for k, v in enumerate(G.vertices)}
    out = [[] for _ in range(n)]
    inn = [[] for _ in range(n)]
    for (u, v) in G.edges:
        out[idx[u]].append(idx[v])
        inn[idx[v]].append(idx[u])
    for lst in out:
        lst.sort()
    s = idx[source]
    closing = target is None
    t = s if closing else idx[target]
    visited = [False] * n
    visited[s] = True
    path = [s]

    def feasible(cur: int) -> bool:
        # every unvisited vertex still needs a way in and a way out
        for w in range(n):
            if visited[w]:
                continue
            if not any(not visited[p] or p == cur for p in inn[w]):
                return False
            if w == t and not closing:
                continue
            if not any(not visited[q] or (closing and q == s) for q in out[w]):
                return False
        return True

    def rec(cur: int):
        if len(path) == n:
            if closing:
                if s in out[cur]:
                    yield list(path)
            elif cur == t:
                yield list(path)
            return
        for nxt in out[cur]:
            if visited[nxt]:
                continue
            if not closing and nxt == t and len(path) != n - 1:
                continue
            visited[nxt] = True
            path.append(nxt)
            if feasible(nxt):
                yield from rec(nxt)
            path.pop()
            visited[nxt] = False

    if n == 1:
        if closing:
            return
        if s == t:
            yield [s]
        return
    for p in rec(s):
        yield [G.vertices[k] for k in p]


def hamiltonian_cycles(G: WeightedDigraph, limit=ENUMERATION_LIMIT) -> list:
    """Cycles as vertex lists starting at ``G.start`` (closing edge implicit)."""
    return list(_hamiltonian_walks(G, G.start, None, limit))


def cycle_weight(G: WeightedDigraph, cycle: Sequence) -> NCPoly:
    w = NCPoly.const(1)
    for u, v in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        w = w * G.edges[(u, v)]
    return w


def enumerate_hc_poly(G: WeightedDigraph, limit=ENUMERATION_LIMIT) -> NCPoly:
    out = NCPoly()
    for cyc in _hamiltonian_walks(G, G.start, None, limit):
        out = out + cycle_weight(G, cyc)
    return out


def hc_matrix_eval(G: WeightedDigraph, substitution_size: int, seed: int = 0,
                   limit: int | None = None) -> np.ndarray:
    """Hamiltonian-cycle polynomial evaluated at the substitution matrices.

    Matches ``pit_matrix_eval(enumerate_hc_poly(G), ...)`` without building
    the polynomial; used past the exact-enumeration bound.
    """
    mats = {e: pit_matrix_eval(w, substitution_size, seed) for e, w in G.edges.items()}
    size = substitution_size
    total = np.zeros((size, size), dtype=object)
    for cyc in _hamiltonian_walks(G, G.start, None, limit):
        m = None
        for u, v in zip(cyc, cyc[1:] + [cyc[0]]):
            m = mats[(u, v)] if m is None else m.dot(mats[(u, v)])
        total = total + m
    return total


def hamiltonian_paths(G: WeightedDigraph, source, target, limit=ENUMERATION_LIMIT) -> list:
    return list(_hamiltonian_walks(G, source, target, limit))


# ----------------------------------------------------------------------------
# formula -> Hamiltonian-cycle graph


def dag_to_hc_graph(d: LayeredDAG) -> WeightedDigraph:
    """Digraph whose Hamiltonian cycles from ``s`` are the ``s -> t`` paths of ``d``.

    Each inner layer is closed into a directed ring of weight-1 edges.  An
    edge into inner-layer vertex ``j`` is redirected to ``j+1 (mod k)``, so a
    cycle entering a layer walks the whole ring and leaves from the vertex
    the original path went through.  Edges into ``t`` are kept, and ``t -> s``
    closes the cycle.
    """
    d.validate()
    where = d.layer_of()
    pos = {v: j for layer in d.layers for j, v in enumerate(layer)}
    last = d.depth
    G = WeightedDigraph(d.vertices(), {}, d.source, d.sink,
                        layers=[list(layer) for layer in d.layers])
    for i in range(1, last):
        layer = d.layers[i]
        k = len(layer)
        if k >= 2:
            for j in range(k):
                G.add_edge(layer[j], layer[(j + 1) % k], 1)
    for (u, v), w in d.edges.items():
        i = where[v]
        if i == last:
            G.add_edge(u, v, w)
        else:
            layer = d.layers[i]
            G.add_edge(u, layer[(pos[v] + 1) % len(layer)], w)
    G.add_edge(d.sink, d.source, 1)
    return G


def formula_to_hc_graph(f: Formula) -> WeightedDigraph:
    return dag_to_hc_graph(formula_to_layered_dag(f))


# ----------------------------------------------------------------------------
# rosette and glue


def rosette(i: int, tag: Hashable = "R") -> WeightedDigraph:
    """Rosette with ``i`` indicator edges and ``3i + 1`` vertices.

    Pairs ``(k_in, k_out)`` for ``k = 1..i`` sit between hubs
    ``b_0 = s, b_1, ..., b_(i-1), b_i = t``.  Forward walks go
    ``b_(k-1) -> k_in -> k_out -> b_k``; the indicator ``b_(k-1) -> k_out``
    flips pair ``k`` to ``k_out -> k_in``.  One backward walk
    ``s -> i_in -> i_out -> b_(i-1) -> ... -> 1_out -> t`` also avoids every
    indicator.
    """
    if i < 2:
        raise ValueError("a rosette needs at least 2 indicator edges")
    s, t = (tag, "s"), (tag, "t")
    hub = {0: s, i: t}
    for k in range(1, i):
        hub[k] = (tag, "b", k)
    vin = {k: (tag, "in", k) for k in range(1, i + 1)}
    vout = {k: (tag, "out", k) for k in range(1, i + 1)}
    vertices = [s] + [hub[k] for k in range(1, i)] + \
        [x for k in range(1, i + 1) for x in (vin[k], vout[k])] + [t]
    G = WeightedDigraph(vertices, {}, s, t)
    for k in range(1, i + 1):
        G.add_edge(vin[k], vout[k])
        G.add_edge(vout[k], vin[k])
        G.add_edge(hub[k - 1], vin[k])     # forward entry
        G.add_edge(vin[k], hub[k])         # forward exit after a flip
        G.add_edge(vout[k], hub[k])        # forward exit
        G.add_edge(hub[k - 1], vout[k])    # indicator
        G.indicators[(hub[k - 1], vout[k])] = k
    # backward walk
    G.add_edge(s, vin[i])
    for k in range(1, i):
        G.add_edge(hub[k], vin[k])
    for k in range(2, i + 1):
        G.add_edge(vout[k], hub[k - 1])
    G.add_edge(vout[1], t)
    return G


def rosette_path_census(i: int) -> dict:
    """Map each used indicator subset (frozenset of indices) to its path count."""
    R = rosette(i)
    census: dict = {}
    for path in hamiltonian_paths(R, R.start, R.sink, limit=None):
        used = frozenset(R.indicators[e] for e in zip(path, path[1:]) if e in R.indicators)
        census[used] = census.get(used, 0) + 1
    return census


#: Internal glue edges.  Both-or-neither holds for this set.
GLUE_INTERNAL_EDGES = (
    ("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"),
    ("d", "e"), ("e", "d"), ("e", "f"), ("f", "e"),
    ("a", "d"), ("s", "c"), ("s", "t"), ("f", "t"),
)

#: The same set plus ``c -> f``, which admits a walk ``u -> a b c f e d -> v'``.
FIGURE_GLUE_INTERNAL_EDGES = GLUE_INTERNAL_EDGES + (("c", "f"),)


def glue(H: WeightedDigraph, e1: Edge, e2: Edge, tag: Hashable = None,
         taken_weight=1, internal_edges=GLUE_INTERNAL_EDGES) -> WeightedDigraph:
    """Force Hamiltonian cycles of ``H`` to use both of ``e1``, ``e2`` or neither.

    ``H`` must be closed by its edge ``sink -> start``; that edge is replaced
    by ``sink -> gs`` and ``gt -> start`` through the gadget, whose ``gt``
    becomes the new sink.  When both edges are taken their weights are
    replaced by ``taken_weight`` (placed where ``e1`` was) and 1.
    """
    e1, e2 = tuple(e1), tuple(e2)
    if e1 == e2:
        raise ValueError("glued edges must differ")
    closing = (H.sink, H.start)
    for e in (e1, e2):
        if e not in H.edges:
            raise KeyError(f"edge {e} not in graph")
        if e == closing:
            raise ValueError("cannot glue the closing edge")
    if closing not in H.edges:
        raise ValueError("graph has no closing edge sink -> start")
    if tag is None:
        tag = ("glue", sum(1 for v in H.vertices if isinstance(v, tuple) and v[-1] == "s"
                           and v[0] == "glue"))
    g = {name: (*((tag,) if not isinstance(tag, tuple) else tag), name)
         for name in "abcdefst"}
    out = H.copy()
    out.layers = None
    out.remove_edge(*e1)
    out.remove_edge(*e2)
    out.remove_edge(*closing)
    out.vertices.extend(g[name] for name in "abcdefst")
    for x, y in internal_edges:
        out.add_edge(g[x], g[y], 1)
    u, v = e1
    u2, v2 = e2
    out.add_edge(u, g["a"], taken_weight)
    out.add_edge(g["c"], v, 1)
    out.add_edge(u2, g["f"], 1)
    out.add_edge(g["d"], v2, 1)
    out.add_edge(H.sink, g["s"], 1)
    out.add_edge(g["t"], H.start, 1)
    out.sink = g["t"]
    return out


# ----------------------------------------------------------------------------
# boolean sums


def occurrences(G: WeightedDigraph, name: str) -> list:
    return sorted((e for e, w in G.edges.items() if name in w.variables()),
                  key=lambda e: (str(e[0]), str(e[1])))


def single_occurrence_boolean_sum(G: WeightedDigraph, y: str) -> WeightedDigraph:
    """Sum over ``y in {0,1}`` when ``y`` labels a single cross-layer edge.

    That edge gets ``y := 1``; every other edge across the same layer
    boundary is doubled.  Each Hamiltonian cycle crosses the boundary once.
    """
    if G.layers is None:
        raise ValueError("graph has no layer structure")
    occ = occurrences(G, y)
    if not occ:
        raise ValueError(f"variable {y!r} labels no edge")
    if len(occ) > 1:
        raise ValueError(f"variable {y!r} labels {len(occ)} edges")
    (u, v), = occ
    where = {x: i for i, layer in enumerate(G.layers) for x in layer}
    i = where[u]
    if where[v] != i + 1:
        raise ValueError(f"edge {u}->{v} carrying {y!r} is not a cross-layer edge")
    if G.edges[(u, v)].degree() > 1:
        raise ValueError(f"edge weight {G.edges[(u, v)]} is not linear in {y!r}")
    out = G.copy()
    for (a, b), w in G.edges.items():
        if (a, b) == (u, v):
            out.edges[(a, b)] = w.subs(y, 1)
        elif where.get(a) == i and where.get(b) == i + 1:
            out.edges[(a, b)] = w * 2
    return out


def attach_rosette(G: WeightedDigraph, i: int, tag: Hashable) -> tuple:
    """Splice a rosette in front of ``G``'s closing edge.

    Returns the new graph and the rosette's indicator edges ``{k: edge}``.
    """
    R = rosette(i, tag)
    out = G.copy()
    out.layers = None
    out.remove_edge(G.sink, G.start)
    out.merge(R)
    out.add_edge(G.sink, R.start, 1)
    out.add_edge(R.sink, G.start, 1)
    out.sink = R.sink
    return out, {k: e for e, k in R.indicators.items()}


def boolean_sum_pipeline(f: Formula, summed: Sequence[str]) -> WeightedDigraph:
    """Graph whose Hamiltonian-cycle polynomial is ``boolean_sum(f, summed)``."""
    G = formula_to_hc_graph(f)
    summed = list(summed)
    counts = {y: len(occurrences(G, y)) for y in summed}
    for y, c in counts.items():
        if c == 0:
            raise ValueError(f"summed variable {y!r} does not occur")
    for y in summed:
        if counts[y] == 1:
            G = single_occurrence_boolean_sum(G, y)
    glue_no = 0
    for r_no, y in enumerate(y for y in summed if counts[y] > 1):
        occ = occurrences(G, y)
        tag = ("R", r_no)
        G, indicator_of = attach_rosette(G, len(occ), tag)
        for k, e in enumerate(occ, start=1):
            taken = G.edges[e].subs(y, 1)
            G = glue(G, e, indicator_of[k], tag=("glue", glue_no), taken_weight=taken)
            glue_no += 1
    return G


def random_formula(rng, variables: Sequence[str], max_gates: int, allow_const=True) -> Formula:
    """Random formula tree with at most ``max_gates`` add/mul nodes."""

    def leaf():
        if allow_const and rng.random() < 0.15:
            return Const(rng.choice([2, -1, Fraction(1, 2), 3]))
        return Var(rng.choice(list(variables)))

    def build(budget: int):
        if budget == 0 or rng.random() < 0.3:
            return leaf(), 0
        arity = rng.choice([2, 2, 3])
        used = 1
        args = []
        for _ in range(arity):
            child, c = build(max(0, (budget - used) // arity))
            args.append(child)
            used += c
        node = Add(tuple(args)) if rng.random() < 0.5 else Mul(tuple(args))
        return node, used

    return build(max_gates)[0]


def random_host_graph(rng, n: int, p: float = 0.35) -> WeightedDigraph:
    """Host for gluing: a planted Hamiltonian ``0 -> ... -> n-1`` plus random edges.

    Vertex ``n-1`` is the sink; its only out-edge is the weight-1 closing
    edge to ``0``.  Other edges carry distinct variables ``w_u_v``.
    """
    order = [0] + rng.sample(range(1, n - 1), n - 2) + [n - 1]
    E = set(zip(order, order[1:]))
    for u in range(n - 1):
        for v in range(1, n):
            if u != v and rng.random() < p:
                E.add((u, v))
    H = WeightedDigraph(list(range(n)), {}, 0, n - 1)
    for u, v in sorted(E):
        H.add_edge(u, v, f"w_{u}_{v}")
    H.add_edge(n - 1, 0, 1)
    return H


def predicted_glue_image(H: WeightedDigraph, e1: Edge, e2: Edge) -> NCPoly:
    """HC polynomial that ``glue(H, e1, e2)`` should have, read off ``H`` alone."""
    e1, e2 = tuple(e1), tuple(e2)
    out = NCPoly()
    for cyc in hamiltonian_cycles(H, limit=None):
        steps = list(zip(cyc, cyc[1:] + [cyc[0]]))
        used = (e1 in steps, e2 in steps)
        if used[0] != used[1]:
            continue
        w = NCPoly.const(1)
        for e in steps:
            w = w * (NCPoly.const(1) if used[0] and e in (e1, e2) else H.edges[e])
        out = out + w
    return out
