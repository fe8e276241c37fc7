"""Command-line front end.

Exit codes: 0 all pass, 1 any fail, 2 only undecided results, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import suites
from .core import ParseError, associated_primes, format_ideal, parse_ideal, parse_monomial
from .graphs import analytic_spread_edge_ideal, analyze, builtin_graph, edge_ideal, parse_graph
from .homology import MultigradedModule, ZeroModuleError, betti_csv, betti_depth
from .linalg import parse_field
from .newton import integral_closure_power
from .stanley import DEFAULT_BUDGET, certificate_json, poset_of, sdepth_decision, sdepth_exact

EXIT_PASS, EXIT_FAIL, EXIT_UNDECIDED, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# -- input helpers ------------------------------------------------------------


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def load_ideal(path: str):
    try:
        return parse_ideal(read_text(path))
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def load_graph(spec: str):
    if not os.path.exists(spec) and spec != "-":
        try:
            return builtin_graph(spec)
        except ValueError as exc:
            raise UsageError(f"{spec}: not a file and {exc}") from exc
    try:
        return parse_graph(read_text(spec))
    except ValueError as exc:
        raise UsageError(f"{spec}: {exc}") from exc


def corpus_files(path: str) -> list[Path]:
    p = Path(path)
    if p.is_dir():
        files = sorted(f for f in p.iterdir() if f.is_file() and not f.name.startswith("."))
    elif p.is_file():
        files = [p]
    else:
        raise UsageError(f"corpus {path} does not exist")
    if not files:
        raise UsageError(f"corpus {path} is empty")
    return files


def load_graph_corpus(path: str):
    return [load_graph(str(f)) for f in corpus_files(path)]


def load_ideal_corpus(path: str):
    return [load_ideal(str(f))[0] for f in corpus_files(path)]


def module_of(kind: str, I):
    if kind == "quotientRing":
        return MultigradedModule.quotient_ring(I)
    return MultigradedModule.ideal(I)


def emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        for key in sorted(obj):
            val = obj[key]
            print(f"{key},{json.dumps(val, sort_keys=True) if isinstance(val, (list, dict)) else val}")


# -- ideal commands -------------------------------------------------------------


def cmd_ideal(args) -> int:
    I, names = load_ideal(args.file)
    if args.op == "closure":
        if I.is_zero:
            raise UsageError("integral closure of the zero ideal requested")
        sys.stdout.write(format_ideal(integral_closure_power(I, args.k), names))
        return EXIT_PASS
    if args.op == "power":
        sys.stdout.write(format_ideal(I.power(args.k), names))
        return EXIT_PASS
    if args.op == "colon":
        if args.by is None:
            raise UsageError("colon needs --by <monomial>")
        try:
            u = parse_monomial(args.by, names)
        except ParseError as exc:
            raise UsageError(str(exc)) from exc
        sys.stdout.write(format_ideal(I.colon(u), names))
        return EXIT_PASS
    if args.op == "ass":
        try:
            primes = associated_primes(I)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        for P in sorted(sorted(P) for P in primes):
            print("(" + ", ".join(names[i] for i in P) + ")")
        return EXIT_PASS
    M = module_of(args.module, I)
    if args.op == "depth":
        try:
            r = betti_depth(M, parse_field(args.field))
        except ZeroModuleError as exc:
            print(f"depth,inf  # {exc}")
            return EXIT_PASS
        if args.betti:
            sys.stdout.write(betti_csv(r.table, I.n))
        else:
            emit({"module": args.module, "field": args.field, "depth": r.depth, "pd": r.pd}, args.format)
        return EXIT_PASS
    # sdepth
    if M.is_zero:
        emit({"module": args.module, "sdepth": "inf"}, args.format)
        return EXIT_PASS
    P = poset_of(M)
    if args.level is not None:
        d = sdepth_decision(P, args.level, args.budget)
        out = {"module": args.module, "level": args.level, "decision": d.result, "nodes": d.nodes}
        if d.result:
            out["certificate"] = json.loads(certificate_json(d.certificate))
        emit(out, args.format)
        return EXIT_UNDECIDED if d.result is None else EXIT_PASS
    from .stanley import UndecidedError

    try:
        value = sdepth_exact(P, args.budget)
    except UndecidedError as exc:
        emit({"module": args.module, "sdepth": None, "undecided": str(exc)}, args.format)
        return EXIT_UNDECIDED
    emit({"module": args.module, "sdepth": value}, args.format)
    return EXIT_PASS


# -- graph commands -------------------------------------------------------------


def cmd_graph(args) -> int:
    G = load_graph(args.graph)
    if args.op == "edgeideal":
        sys.stdout.write(format_ideal(edge_ideal(G)))
        return EXIT_PASS
    info = analyze(G)

    def fin(x):
        return "inf" if x == math.inf else int(x)

    out = {
        "n": G.n,
        "edges": len(G.edges),
        "components": info.count,
        "bipartite_components": info.p,
        "bipartite": info.bipartite,
        "connected": info.connected,
        "girth": fin(info.girth),
        "component_girths": [fin(c.girth) for c in info.components],
    }
    if G.edges:
        out["analytic_spread"] = analytic_spread_edge_ideal(G)
    emit(out, args.format)
    return EXIT_PASS


# -- suites -----------------------------------------------------------------------

# which generic flags each suite understands, and under which parameter name
SUITE_FLAGS = {
    "girth-theorem": {"nmax": "nmax", "kmax": "tree_kmax", "budget": "budget", "corpus": "graphs"},
    "closure-sdepth": {"nmax": "nmax", "kmax": "kmax", "budget": "budget", "corpus": "graphs"},
    "closure-depth-limit": {"nmax": "nmax", "kmax": "kmax", "field": "field", "corpus": "ideals", "ell": None},
    "dnormal": {"nmax": "nmax", "kmax": "mmax", "field": "field", "seed": "seed", "corpus": "ideals"},
    "ass-containment": {"nmax": "nmax", "kmax": "mmax", "seed": "seed", "corpus": "ideals"},
    "normality-bipartite": {"nmax": "nmax", "kmax": "kmax", "corpus": "graphs"},
}


def suite_params(args) -> dict:
    allowed = SUITE_FLAGS[args.name]
    given = {k: getattr(args, k) for k in ("nmax", "kmax", "budget", "field", "seed", "corpus", "ell")
             if getattr(args, k) is not None}
    bad = sorted(set(given) - set(allowed))
    if bad:
        raise UsageError(f"suite {args.name} does not take --{', --'.join(bad)}")
    params = {}
    for flag, value in given.items():
        target = allowed[flag]
        if flag == "ell":
            continue
        if flag == "field":
            value = parse_field(value)
        if flag == "corpus":
            if target == "graphs":
                value = load_graph_corpus(value)
            else:
                ideals = load_ideal_corpus(value)
                value = [(I, given.get("ell")) for I in ideals] if args.name == "closure-depth-limit" else ideals
        params[target] = value
    if "ell" in given and "corpus" not in given:
        raise UsageError("--ell only applies together with --corpus")
    return params


def write_report(rep: suites.SuiteReport, args) -> int:
    text = rep.render(args.format, args.timing)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        path = out / rep.filename(args.format)
        path.write_text(text)
        s = rep.summary
        print(f"{path}  pass={s['pass']} fail={s['fail']} undecided={s['undecided']}")
    else:
        sys.stdout.write(text)
    return rep.exit_code


def cmd_suite(args) -> int:
    if args.name not in suites.SUITES:
        raise UsageError(f"unknown suite {args.name!r}; choose from {', '.join(suites.SUITES)}")
    rep = suites.run_suite(args.name, **suite_params(args))
    if args.corpus is not None:
        rep.params["corpus"] = args.corpus
    if args.ell is not None:
        rep.params["ell"] = args.ell
    return write_report(rep, args)


def cmd_hunt(args) -> int:
    rep = suites.hunt(
        generator=args.generator,
        nmax=args.nmax,
        n=args.n,
        samples=args.samples,
        kmin=args.kmin,
        kmax=args.kmax,
        seed=args.seed,
        budget=args.budget,
    )
    return write_report(rep, args)


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = Parser(prog="monideal", description="Monomial ideal invariants and verification suites.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=Parser)

    p = sub.add_parser("ideal", help="computations on one ideal file")
    p.add_argument("op", choices=["closure", "power", "colon", "ass", "depth", "sdepth"])
    p.add_argument("file", help="ideal text file, or - for stdin")
    p.add_argument("--k", type=int, default=1, help="power for closure/power (default 1)")
    p.add_argument("--by", help="monomial for colon")
    p.add_argument("--module", choices=["quotientRing", "ideal"], default="quotientRing")
    p.add_argument("--field", default="q", help="q or fp:<p>")
    p.add_argument("--betti", action="store_true", help="print the multigraded Betti table as CSV")
    p.add_argument("--level", type=int, help="decide sdepth >= level instead of computing sdepth")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("graph", help="graph invariants and edge ideals")
    p.add_argument("op", choices=["analyze", "edgeideal"])
    p.add_argument("graph", help="graph file or a name such as C6, P4, K5, K2,3")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("suite", help="verification suites")
    ssub = p.add_subparsers(dest="action", required=True, parser_class=Parser)
    r = ssub.add_parser("run")
    r.add_argument("name", help=", ".join(suites.SUITES))
    r.add_argument("--nmax", type=int)
    r.add_argument("--kmax", type=int)
    r.add_argument("--field")
    r.add_argument("--seed", type=int)
    r.add_argument("--budget", type=int)
    r.add_argument("--corpus", help="file or directory of graph or ideal files")
    r.add_argument("--ell", type=int, help="analytic spread for --corpus ideals (closure-depth-limit)")
    r.add_argument("--out", help="directory for the report file")
    r.add_argument("--format", choices=["csv", "json"], default="json")
    r.add_argument("--timing", action="store_true", help="include wall-clock seconds per row")
    r.set_defaults(func=cmd_suite)

    p = sub.add_parser("hunt", help="search for connected bipartite G with sdepth(I(G)^k) < 2")
    p.add_argument("--generator", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--nmax", type=int, default=5, help="vertex bound for exhaustive mode")
    p.add_argument("--n", type=int, default=7, help="vertex count for random mode")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--kmin", type=int, default=1)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=20_000)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_hunt)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"monideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"monideal: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
