"""The twelve acceptance suites, runnable from tests and from ``symdet selftest``.

Each ``criterion_N(seed)`` returns a :class:`CriterionResult`; nothing here
asserts, so a failing suite reports its first counterexamples instead of
stopping the run.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import builtin_algebra, check_algebra, instantiate_cycle_algebra
from .core import mixed_inversion_count
from .cyclecount import (Graph, all_cycle_counts, brute_force_cycle_count,
                         check_reduction_structure, hamiltonian_count, reduction_sdet)
from .gadgets import (Add, Mul, Var, boolean_sum, boolean_sum_pipeline, enumerate_hc_poly,
                      formula_variables, glue, hamiltonian_cycles, hc_matrix_eval,
                      predicted_glue_image, random_formula, random_host_graph, rosette_path_census)
from .ncpoly import CPoly, pit_matrix_eval
from .sampling import random_block_lower, random_matrix, zero_lower_left
from .sdet import AlgMatrix, cofactor_det, pme_sum, sdet_fast, sdet_naive
from .vnpred import (FamilyMonomial, build_vnp_matrix, check_vnp_structure, extract_hc,
                     family_monomial_coeff, hc_direct, sdet_family)

MAX_SHOWN = 5


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.title} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "seconds": round(self.seconds, 3), "detail": self.detail}


def _timed(number: int, title: str):
    def wrap(fn):
        def run(seed: int = 0) -> CriterionResult:
            t0 = time.perf_counter()
            passed, detail = fn(seed)
            return CriterionResult(number, title, passed, detail, time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.number = number
        return run
    return wrap


ENGINE_ALGEBRAS = ("mat:2", "cycle:3", "free")
# cycle-algebra products vanish unless indices chain, so give entries more terms
TERMS_PER_ENTRY = {"mat:2": 3, "cycle:3": 8, "free": 1, "scalar": 1}


def _section4_corpus(seed: int) -> list:
    rng = random.Random(f"{seed}/graphs")
    corpus = [("K%d" % n, Graph.complete(n)) for n in range(4, 8)]
    for k in range(30):
        n = 4 + k % 4
        corpus.append((f"G({n},0.5)#{k}", Graph.random(n, 0.5, rng)))
    return corpus


@_timed(1, "engine equivalence sdet_fast = sdet_naive")
def criterion_1(seed):
    bad = []
    for name in ENGINE_ALGEBRAS:
        alg = builtin_algebra(name)
        rng = random.Random(f"{seed}/engines/{name}")
        for k in range(50):
            n = 2 + k % 4
            M = random_matrix(alg, n, rng, max_terms=TERMS_PER_ENTRY[name])
            if sdet_fast(M) != sdet_naive(M):
                bad.append(f"{name} #{k} n={n}")
    return not bad, {"matrices": 150, "mismatches": bad[:MAX_SHOWN]}


@_timed(2, "principal minor expansion and mixed-inversion parity")
def criterion_2(seed):
    bad = []
    for name in ENGINE_ALGEBRAS:
        alg = builtin_algebra(name)
        rng = random.Random(f"{seed}/pme/{name}")
        for k in range(20):
            n = 1 + k % 5
            A = random_matrix(alg, n, rng, max_terms=TERMS_PER_ENTRY[name])
            if sdet_fast(A + AlgMatrix.identity(alg, n)) != pme_sum(A):
                bad.append(f"{name} #{k} n={n}")
    rng = random.Random(f"{seed}/parity")
    parity_bad = []
    for k in range(1000):
        n = rng.randint(1, 8)
        S = [i for i in range(1, n + 1) if rng.random() < 0.5]
        C = [i for i in range(1, n + 1) if i not in S]
        sigma = rng.sample(range(1, n + 1), n)
        # tau agrees with sigma off S and permutes sigma's values on S
        values = [sigma[i - 1] for i in S]
        rng.shuffle(values)
        tau = list(sigma)
        for i, v in zip(S, values):
            tau[i - 1] = v
        assert all(tau[c - 1] == sigma[c - 1] for c in C)
        if (mixed_inversion_count(sigma, S) - mixed_inversion_count(tau, S)) % 2:
            parity_bad.append({"sigma": sigma, "tau": tau, "S": S})
    ok = not bad and not parity_bad
    return ok, {"pme_mismatches": bad[:MAX_SHOWN], "parity_failures": parity_bad[:MAX_SHOWN]}


@_timed(3, "commutative degeneration to the cofactor determinant")
def criterion_3(seed):
    alg = builtin_algebra("scalar")
    rng = random.Random(f"{seed}/scalar")
    bad = []
    for k in range(20):
        n = 1 + k % 7
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        got = sdet_fast(AlgMatrix.from_rows(alg, rows)).coeff((1, 1))
        if got != cofactor_det(rows):
            bad.append({"rows": rows, "sdet": str(got)})
    return not bad, {"mismatches": bad[:MAX_SHOWN]}


@_timed(4, "Hamiltonian and k-cycle counts against brute force")
def criterion_4(seed):
    bad = []
    k7_seconds = None
    for name, G in _section4_corpus(seed):
        t0 = time.perf_counter()
        counts = all_cycle_counts(G)
        if name == "K7":
            k7_seconds = time.perf_counter() - t0
        for k, c in counts.items():
            if c != brute_force_cycle_count(G, k):
                bad.append(f"{name} k={k}: {c} vs {brute_force_cycle_count(G, k)}")
    known = {4: 3, 5: 12, 6: 60, 7: 360}
    for n, expect in known.items():
        if hamiltonian_count(Graph.complete(n)) != expect:
            bad.append(f"K{n} Hamiltonian != {expect}")
    ok = not bad and k7_seconds is not None and k7_seconds < 300
    return ok, {"graphs": 34, "mismatches": bad[:MAX_SHOWN],
                "k7_seconds": round(k7_seconds or 0, 3)}


@_timed(5, "structure of sdet(M_G) coefficients")
def criterion_5(seed):
    bad = []
    for name, G in _section4_corpus(seed):
        report = check_reduction_structure(G, reduction_sdet(G))
        if not report.passed:
            bad.append({name: report.problems[:3]})
    return not bad, {"graphs": 34, "violations": bad[:MAX_SHOWN]}


def example_2x2_grid() -> list:
    """The four 2x2-family polynomials with block letters a, b, c, d."""

    def v(block: str, k: int, l: int) -> CPoly:
        i, j = {"a": (1, 1), "b": (1, 2), "c": (2, 1), "d": (2, 2)}[block]
        return CPoly.var(f"m_{i}_{j}_{k}_{l}")

    a = lambda k, l: v("a", k, l)  # noqa: E731
    b = lambda k, l: v("b", k, l)  # noqa: E731
    c = lambda k, l: v("c", k, l)  # noqa: E731
    d = lambda k, l: v("d", k, l)  # noqa: E731
    t11 = (2 * (a(1, 1) * d(1, 1)) + a(1, 2) * d(2, 1) + a(2, 1) * d(1, 2)
           - 2 * (b(1, 1) * c(1, 1)) - b(1, 2) * c(2, 1) - b(2, 1) * c(1, 2))
    t12 = (a(1, 1) * d(1, 2) + a(1, 2) * d(2, 2) + a(1, 2) * d(1, 1) + a(2, 2) * d(1, 2)
           - b(1, 1) * c(1, 2) - b(1, 2) * c(2, 2) - b(1, 2) * c(1, 1) - b(2, 2) * c(1, 2))
    t21 = (a(1, 1) * d(2, 1) + a(2, 1) * d(1, 1) + a(2, 1) * d(2, 2) + a(2, 2) * d(2, 1)
           - b(1, 1) * c(2, 1) - b(2, 1) * c(1, 1) - b(2, 1) * c(2, 2) - b(2, 2) * c(2, 1))
    t22 = (2 * (a(2, 2) * d(2, 2)) + a(1, 2) * d(2, 1) + a(2, 1) * d(1, 2)
           - 2 * (b(2, 2) * c(2, 2)) - b(1, 2) * c(2, 1) - b(2, 1) * c(1, 2))
    half = Fraction(1, 2)
    return [[t11 * half, t12 * half], [t21 * half, t22 * half]]


@_timed(6, "2x2 family golden values")
def criterion_6(seed):
    T = sdet_family(2, 2)
    expect = example_2x2_grid()
    bad = [f"T{k + 1}{l + 1}" for k in range(2) for l in range(2) if T[k][l] != expect[k][l]]
    return not bad, {"wrong_entries": bad}


FAMILY_INSTANCES = ((2, 2), (2, 3), (3, 3), (2, 4))


def family_discrepancies(m: int, n: int, all_positions: bool = False) -> tuple:
    """``(coefficients checked, discrepancies)`` for one instance.

    By default each monomial is checked in the entries ``T(k,l)`` where it
    appears.  ``all_positions`` also checks it at every other ``(k, l)``,
    where the extracted coefficient is 0.
    """
    T = sdet_family(m, n)
    if all_positions:
        monos = sorted({key for row in T for poly in row for key, _ in poly.items()})
        cells = [(k, l, key) for key in monos for k in range(1, m + 1) for l in range(1, m + 1)]
    else:
        cells = [(k, l, key) for k in range(1, m + 1) for l in range(1, m + 1)
                 for key, _ in T[k - 1][l - 1].items()]
    bad = []
    for k, l, key in cells:
        mono = FamilyMonomial.from_cpoly_key(key)
        got = Fraction(T[k - 1][l - 1].coeff(key))
        claimed = family_monomial_coeff(mono, k, l, n)
        if got != claimed:
            bad.append({"k": k, "l": l, "factors": mono.to_json()["factors"],
                        "extracted": str(got), "formula": str(claimed)})
    return len(cells), bad


@_timed(7, "closed-form family coefficients")
def criterion_7(seed):
    detail = {}
    ok = True
    for m, n in FAMILY_INSTANCES:
        checked, bad = family_discrepancies(m, n)
        ok = ok and not bad
        detail[f"m={m},n={n}"] = {"checked": checked, "discrepancies": len(bad),
                                  "first": bad[:2]}
    return ok, detail


@_timed(8, "Hamiltonian-cycle polynomial extraction")
def criterion_8(seed):
    bad = []
    graphs = [(f"K{n}", Graph.complete(n, directed=True)) for n in range(2, 7)]
    rng = random.Random(f"{seed}/directed")
    for k in range(20):
        n = 2 + k % 5
        graphs.append((f"D({n})#{k}", Graph.random(n, 0.5, rng, directed=True)))
    word_counts = {}
    for name, G in graphs:
        S = sdet_fast(build_vnp_matrix(G))
        hc = extract_hc(G, S=S)
        if hc != hc_direct(G):
            bad.append(f"{name}: extracted polynomial differs")
        structure = check_vnp_structure(S)
        if structure:
            bad.append(f"{name}: unexpected labels {structure[:2]}")
        if name.startswith("K"):
            word_counts[name] = len(hc)
    expected_counts = {f"K{n}": [1, 1, 2, 6, 24, 120][n - 1] for n in range(2, 7)}
    if word_counts != expected_counts:
        bad.append(f"word counts {word_counts}")
    return not bad, {"graphs": len(graphs), "word_counts": word_counts, "problems": bad[:MAX_SHOWN]}


@_timed(9, "rosette path census")
def criterion_9(seed):
    bad = []
    for i in range(2, 6):
        census = rosette_path_census(i)
        expect = {frozenset(): 2}
        for r in range(1, i + 1):
            for sub in itertools.combinations(range(1, i + 1), r):
                expect[frozenset(sub)] = 1
        if census != expect:
            bad.append(i)
    return not bad, {"failing_i": bad}


@_timed(10, "glue both-or-neither")
def criterion_10(seed):
    rng = random.Random(f"{seed}/glue")
    bad = []
    cases = {"both": 0, "neither": 0, "one": 0}
    hosts = 12
    for k in range(hosts):
        H = random_host_graph(rng, rng.randint(4, 9))
        closing = (H.sink, H.start)
        e1, e2 = rng.sample(sorted(e for e in H.edges if e != closing), 2)
        for cyc in hamiltonian_cycles(H, limit=None):
            steps = set(zip(cyc, cyc[1:] + [cyc[0]]))
            cases[{2: "both", 1: "one", 0: "neither"}[(e1 in steps) + (e2 in steps)]] += 1
        if enumerate_hc_poly(glue(H, e1, e2)) != predicted_glue_image(H, e1, e2):
            bad.append(f"host #{k} edges {e1} {e2}")
    return not bad, {"hosts": hosts, "host_cycles": cases, "mismatches": bad}


def pipeline_corpus(seed: int) -> tuple:
    """Small cases (graph <= 24 nodes) and two larger rosette cases."""
    x, y, z = Var("x"), Var("y"), Var("z")
    small = [
        (Mul((x, y)), ["y"]),
        (Add((x, y)), ["y"]),
        (x, []),
        (Mul((x, Add((y, z)), x)), ["y"]),
        (Mul((Add((x, y)), Add((x, z)))), ["y", "z"]),
    ]
    rng = random.Random(f"{seed}/formulas")
    while len(small) < 12:
        f = random_formula(rng, ["x", "y", "z"], 4)
        summed = [v for v in ("y", "z") if v in formula_variables(f)]
        if summed and f.gates() <= 4 and len(boolean_sum_pipeline(f, summed).vertices) <= 24:
            small.append((f, summed))
    large = [
        (Mul((y, x, y)), ["y"]),
        (Add((Mul((x, y)), Mul((y, Add((x, z)))))), ["y", "z"]),
    ]
    return small, large


@_timed(11, "boolean-sum pipeline end to end")
def criterion_11(seed):
    small, large = pipeline_corpus(seed)
    bad = []
    sizes = []
    for f, summed in small:
        G = boolean_sum_pipeline(f, summed)
        sizes.append(len(G.vertices))
        if len(G.vertices) > 24 or enumerate_hc_poly(G) != boolean_sum(f.to_ncpoly(), summed):
            bad.append(f.to_json())
    large_sizes = []
    for f, summed in large:
        G = boolean_sum_pipeline(f, summed)
        large_sizes.append(len(G.vertices))
        expect = boolean_sum(f.to_ncpoly(), summed)
        size = max(2, expect.degree() // 2 + 1)
        for s in (seed, seed + 1, seed + 2):
            if not np.array_equal(hc_matrix_eval(G, size, s, limit=None),
                                  pit_matrix_eval(expect, size, s)):
                bad.append({"formula": f.to_json(), "seed": s})
    return not bad, {"small_sizes": sizes, "large_sizes": large_sizes, "mismatches": bad}


BUILTIN_CHECKS = ("scalar", "mat:1", "mat:2", "mat:3", "cycle:2", "cycle:3", "mat:2|mat:2")


@_timed(12, "algebra integrity, instantiation and block property")
def criterion_12(seed):
    bad = []
    for name in BUILTIN_CHECKS:
        report = check_algebra(builtin_algebra(name), seed=seed)
        if not report.passed:
            bad.append(f"{name}: {report.message}")
    for n in range(2, 5):
        hom = instantiate_cycle_algebra(n)
        if not hom.passed:
            bad.append(f"cycle:{n} instantiation fails at {hom.counterexample}")
    rng = random.Random(f"{seed}/blocks")
    for k in range(20):
        name = ENGINE_ALGEBRAS[k % 3]
        alg = builtin_algebra(name)
        p, q = rng.randint(1, 3), rng.randint(1, 2)
        M = random_block_lower(alg, p, q, rng)
        if sdet_fast(M) != sdet_fast(zero_lower_left(M, p)):
            bad.append(f"block #{k} over {name}")
    return not bad, {"algebras": list(BUILTIN_CHECKS), "problems": bad[:MAX_SHOWN]}


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12)


def run_all(seed: int = 0, only=None, log=None) -> list:
    results = []
    for crit in CRITERIA:
        if only and crit.number not in only:
            continue
        r = crit(seed)
        if log:
            log(r.line())
        results.append(r)
    return results
