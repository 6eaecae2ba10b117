"""``symdet`` command line: one JSON document on stdout, logs on stderr.

Exit status: 0 success, 1 malformed input, 2 size cutoff, 3 invariant
violation (including a failing ``selftest``).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from fractions import Fraction

from .algebra import algebra_from_json, check_algebra
from .core import InvariantError, SizeCutoffError, format_rational
from .cyclecount import Graph, hamiltonian_count, k_cycle_count
from .gadgets import (WeightedDigraph, boolean_sum_pipeline, enumerate_hc_poly,
                      formula_from_json, glue, rosette)
from .sampling import random_matrix
from .sdet import AlgMatrix, ENGINES, pme_sum, sdet_fast
from .vnpred import (FamilyMonomial, extract_hc, family_monomial_coeff,
                     family_monomial_coeff_exact, sdet_family)

log = logging.getLogger("symdet")

EXIT_INPUT, EXIT_CUTOFF, EXIT_INVARIANT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _edge(text: str) -> tuple:
    u, v = text.split(",")
    return int(u), int(v)


def _algebra_spec(data):
    return data["algebra"]


# subcommands --------------------------------------------------------------


def cmd_sdet(args):
    data = _load(args.matrix)
    M = AlgMatrix.from_json(data)
    if args.method == "fast":
        S = sdet_fast(M, max_n=args.max_n, workers=args.threads)
    else:
        S = ENGINES[args.method](M, max_n=args.max_n)
    return {"algebra": _algebra_spec(data), "n": M.n, "sdet": S.to_json()}


def cmd_pme_check(args):
    data = _load(args.matrix)
    M = AlgMatrix.from_json(data)
    lhs = sdet_fast(M + AlgMatrix.identity(M.algebra, M.n), max_n=args.max_n,
                    workers=args.threads)
    rhs = pme_sum(M, max_n=args.max_n)
    return {"holds": lhs == rhs, "sdet_m_plus_i": lhs.to_json(),
            "principal_minor_sum": rhs.to_json()}


def cmd_random_matrix(args):
    alg = algebra_from_json(args.algebra)
    rng = random.Random(f"{args.seed}/cli-matrix/{args.algebra}/{args.n}")
    return random_matrix(alg, args.n, rng).to_json(args.algebra)


def _graph(args) -> Graph:
    return Graph.from_json(_load(args.graph))


def cmd_count_ham(args):
    return {"hamiltonian_cycles": hamiltonian_count(_graph(args), max_n=args.max_n)}


def cmd_count_cycles(args):
    G = _graph(args)
    value = k_cycle_count(G, args.k, max_n=args.max_n, diagnostics=args.diagnostics)
    if isinstance(value, Fraction):
        return {"k": args.k, "diagnostic_value": format_rational(value)}
    return {"k": args.k, "cycles": value}


def cmd_hc_extract(args):
    G = _graph(args)
    return {"n": G.n, "hc": extract_hc(G, max_n=args.max_n).to_json()}


def cmd_family(args):
    T = sdet_family(args.m, args.n, max_n=args.max_n, workers=args.threads)
    return {"m": args.m, "n": args.n, "T": [[p.to_json() for p in row] for row in T]}


def cmd_coeff(args):
    data = _load(args.monomial)
    mono = FamilyMonomial(tuple(tuple(int(x) for x in f) for f in data["factors"]))
    k, l = int(data["k"]), int(data["l"])
    n = int(data.get("n", mono.n))
    fn = family_monomial_coeff_exact if args.exact else family_monomial_coeff
    return {"coefficient": format_rational(fn(mono, k, l, n))}


def cmd_gadget(args):
    if args.kind == "rosette":
        return rosette(args.i).to_json()
    if args.input is None:
        raise ValueError(f"gadget {args.kind} needs an input file")
    if args.kind == "glue":
        H = WeightedDigraph.from_json(_load(args.input))
        lookup = {str(k): v for k, v in enumerate(H.vertices, start=1)}
        e1 = tuple(lookup[str(x)] for x in _edge(args.e1))
        e2 = tuple(lookup[str(x)] for x in _edge(args.e2))
        return glue(H, e1, e2).to_json()
    if args.kind == "pipeline":
        f = formula_from_json(_load(args.input))
        summed = [s for s in (args.sum or "").split(",") if s]
        return boolean_sum_pipeline(f, summed).to_json()
    if args.kind == "hc-poly":
        G = WeightedDigraph.from_json(_load(args.input))
        return {"hc": enumerate_hc_poly(G).to_json()}
    raise ValueError(args.kind)


def cmd_check_algebra(args):
    spec = args.algebra
    try:
        spec = _load(spec)
    except FileNotFoundError:
        pass  # a builtin name such as "cycle:3"
    report = check_algebra(algebra_from_json(spec), seed=args.seed)
    return report.to_json()


def cmd_selftest(args):
    from .acceptance import run_all

    only = {int(x) for x in args.only.split(",")} if args.only else None
    results = run_all(args.seed, only, log=lambda line: print(line, file=sys.stderr))
    out = {"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}
    if not out["passed"]:
        failed = [r.number for r in results if not r.passed]
        raise _SelftestFailed(out, failed)
    return out


class _SelftestFailed(Exception):
    def __init__(self, payload, failed):
        super().__init__(f"criteria {failed} failed")
        self.payload = payload


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument("--threads", type=int, default=1, help="worker processes for sdet")
    common.add_argument("--max-n", type=int, default=None, help="override the size cutoff")
    common.add_argument("--diagnostics", action="store_true", help="allow diagnostic-only cases")
    common.add_argument("-v", "--verbose", action="store_true", help="log to stderr")

    p = _Parser(prog="symdet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sdet", parents=[common], help="symmetrized determinant of a matrix file")
    s.add_argument("matrix")
    s.add_argument("--method", choices=sorted(ENGINES), default="fast")
    s.set_defaults(func=cmd_sdet)

    s = sub.add_parser("pme-check", parents=[common], help="check sdet(M+I) = principal minor sum")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_pme_check)

    s = sub.add_parser("random-matrix", parents=[common], help="write a seeded random matrix file")
    s.add_argument("--algebra", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_random_matrix)

    s = sub.add_parser("count-ham", parents=[common], help="Hamiltonian cycles of a graph file")
    s.add_argument("graph")
    s.set_defaults(func=cmd_count_ham)

    s = sub.add_parser("count-cycles", parents=[common], help="k-cycles of a graph file")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_count_cycles)

    s = sub.add_parser("hc-extract", parents=[common], help="HC polynomial of a directed graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_hc_extract)

    s = sub.add_parser("family", parents=[common], help="the m x m grid of family polynomials")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("coeff", parents=[common], help="closed-form coefficient of a monomial")
    s.add_argument("monomial")
    s.add_argument("--exact", action="store_true", help="count orderings instead")
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("gadget", parents=[common], help="rosette, glue, pipeline, hc-poly")
    s.add_argument("kind", choices=["rosette", "glue", "pipeline", "hc-poly"])
    s.add_argument("input", nargs="?", help="host graph or formula file")
    s.add_argument("--i", type=int, default=2, help="rosette indicator count")
    s.add_argument("--e1", help="first glued edge as u,v (1-based)")
    s.add_argument("--e2", help="second glued edge as u,v")
    s.add_argument("--sum", help="comma-separated summed variables")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("check-algebra", parents=[common], help="associativity and unit check")
    s.add_argument("algebra", help="structure-constant file or builtin name")
    s.set_defaults(func=cmd_check_algebra)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suites")
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.set_defaults(func=cmd_selftest)
    return p


def emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        emit(args.func(args))
        return 0
    except _SelftestFailed as exc:
        emit(exc.payload)
        log.error(str(exc))
        return EXIT_INVARIANT
    except SizeCutoffError as exc:
        log.error(str(exc))
        return EXIT_CUTOFF
    except InvariantError as exc:
        log.error(str(exc))
        return EXIT_INVARIANT
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        log.error(f"malformed input: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
