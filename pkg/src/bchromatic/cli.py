"""Command-line interface.

Exit status: 0 success, 1 theorem violation or failed validation, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional

from ._kernels import SearchBudgetExceeded
from .ab_family import ab_certificate, is_in_ab, max_ab_decomposition, verify_ab_decomposition
from .bcolor import b_chromatic_number, validate_certificate
from .bounds import bounds_report
from .generators import gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal
from .graph import DimacsParseError, Graph, parse_dimacs, to_dimacs
from .harness import FuzzConfig, run_fuzz
from .invariants import DEFAULT_BUDGET
from .report import make_report, write_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load_graph(path: Optional[str]) -> Graph:
    try:
        if path in (None, "-"):
            return parse_dimacs(sys.stdin.read())
        with open(path, encoding="utf-8") as fh:
            return parse_dimacs(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except DimacsParseError as exc:
        raise UsageError(f"{path or '<stdin>'}: {exc}") from None


def _emit(args: argparse.Namespace, report: dict[str, Any]) -> None:
    if args.json:
        write_report(report, args.json)


def cmd_phi(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    phi, cert = b_chromatic_number(g, args.budget)
    ok = validate_certificate(g, cert)
    print(f"phi = {phi}")
    print(f"colors = {list(cert.coloring.assignment)}")
    print(f"representatives = {list(cert.reps)}")
    if not ok:
        print("certificate FAILED validation", file=sys.stderr)
    _emit(args, make_report(g, [{"kind": "phi", "value": phi, "certificate_valid": ok}],
                            {"b_coloring": cert.to_json()}, budget=args.budget))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    report = bounds_report(g, compute_exact=args.exact, budget=args.budget)
    for rec in report.records:
        value = rec.value if rec.applicable else "-"
        print(f"{rec.name:22s} {str(value):>4s}  {rec.hypothesis}")
    if report.exact_phi is not None:
        print(f"{'exact phi':22s} {report.exact_phi:>4d}")
    for v in report.violations:
        print(f"VIOLATION {v}")
    certs = {"b_coloring": report.certificate.to_json()} if report.certificate else {}
    _emit(args, make_report(g, [{"kind": "bounds", **report.to_json()}], certs, budget=args.budget))
    return EXIT_FAIL if report.violations else EXIT_OK


def cmd_certify_ab(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    try:
        if args.max:
            b, d = max_ab_decomposition(g, args.budget)
        else:
            b, d = args.b, is_in_ab(g, args.b, args.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if d is None:
        print(f"not in A_{b}")
        _emit(args, make_report(g, [{"kind": "ab_membership", "b": b, "member": False}], budget=args.budget))
        return EXIT_FAIL
    cert = ab_certificate(g, d)
    ok = verify_ab_decomposition(g, d) and cert is not None
    print(f"in A_{b}" + (" (phi = %d)" % b if args.max else ""))
    print(json.dumps(d.to_json(), sort_keys=True))
    certs = {"ab_decomposition": d.to_json()}
    if cert is not None:
        certs["b_coloring"] = cert.to_json()
    _emit(args, make_report(g, [{"kind": "ab_membership", "b": b, "member": True, "valid": ok}], certs,
                            budget=args.budget))
    return EXIT_OK if ok else EXIT_FAIL


GENERATORS = {
    "k1t": (gen_k1t_extremal, ("t", "k")),
    "cliquepart": (gen_clique_partition_extremal, ("k", "w")),
    "bipartite": (gen_bipartite_extremal, ("p",)),
}


def cmd_generate(args: argparse.Namespace) -> int:
    func, names = GENERATORS[args.family]
    if len(args.params) != len(names):
        raise UsageError(f"generate {args.family} expects parameters {' '.join(names)}")
    params = dict(zip(names, args.params))
    try:
        g, cert, claimed = func(*args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    label = ", ".join(f"{k}={v}" for k, v in params.items())
    dimacs = to_dimacs(g, f"{args.family} extremal graph ({label}); claimed phi = {claimed}")
    sidecar = make_report(g, [{"kind": "generated", "family": args.family, "params": params, "claimed_phi": claimed}],
                          {"b_coloring": cert.to_json()})
    if args.output in (None, "-"):
        sys.stdout.write(dimacs)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dimacs)
        write_report(sidecar, args.output + ".json")
        print(f"wrote {args.output} (n={g.n}, m={g.num_edges}, claimed phi={claimed}) and {args.output}.json",
              file=sys.stderr)
    _emit(args, sidecar)
    return EXIT_OK


def cmd_fuzz(args: argparse.Namespace) -> int:
    try:
        config = FuzzConfig.from_file(args.config)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"bad fuzz config {args.config}: {exc}") from None
    if config.budget is None:
        config.budget = args.budget
    summary = run_fuzz(config, workers=args.workers)
    counts = summary["counts"]
    print(f"family={config.family} samples={config.samples} seed={config.seed}: "
          f"{counts['pass']} passed, {counts['violation']} violations, {counts['skipped']} skipped")
    for r in summary["results"]:
        if r["report"]["status"] == "violation":
            print(f"VIOLATION sample {r['index']}: graph={json.dumps(r['graph'])}")
            for v in r["report"]["violations"]:
                print(f"    {v}")
    _emit(args, make_report(None, summary["results"], {}, seed=config.seed, budget=config.budget)
          | {"counts": counts, "config": summary["config"]})
    return EXIT_FAIL if counts["violation"] else EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    from .acceptance import run_all

    results = run_all()
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} acceptance criteria passed")
    if args.json:
        write_report(make_report(None, [
            {"name": r.name, "passed": r.passed, "checked": r.checked, "failures": r.failures}
            for r in results
        ]), args.json)
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a machine-readable report")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="search node budget per exact search (default: $BCHROMATIC_BUDGET or %(default)s)")

    parser = argparse.ArgumentParser(prog="bchromatic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="exact b-chromatic number with certificate")
    p.add_argument("file", nargs="?", help="DIMACS .col file (default: stdin)")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("bounds", parents=[common], help="evaluate every applicable upper bound")
    p.add_argument("file", nargs="?")
    p.add_argument("--exact", action="store_true", help="also compute phi and check each bound")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify-ab", parents=[common], help="A_b membership for co-bipartite graphs")
    p.add_argument("file", nargs="?")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--b", type=int, help="decide membership in A_b")
    group.add_argument("--max", action="store_true", help="largest b with the graph in A_b")
    p.set_defaults(func=cmd_certify_ab)

    p = sub.add_parser("generate", parents=[common], help="extremal constructions")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("params", type=int, nargs="+", help="k1t: T K | cliquepart: K W | bipartite: P")
    p.add_argument("-o", "--output", help="DIMACS output path (a .json sidecar is written next to it)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("fuzz", parents=[common], help="seeded theorem-fuzzing campaign")
    p.add_argument("--config", required=True, help="JSON file with FuzzConfig fields")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("selftest", parents=[common], help="run all acceptance criteria")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
