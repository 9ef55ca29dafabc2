"""Command line front end.

Subcommands::

    effecttopo validate <file.ea>          check a partial-sum table against the axioms
    effecttopo topology <file.ea>          closed-set families of a finite table
    effecttopo verify-example {3,4,5}      run one counterexample family's battery
    effecttopo vigier [--scenario ...]     monotone / squeeze convergence checks
    effecttopo relations --ambient eh|ph   the evidence-backed containment graph

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage,
parse or size-cap errors.  ``--format dot`` is supported by ``validate``
(Hasse diagram) and ``relations`` (containment graph).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import eaformat, families, relations, topology
from .errors import (
    CarrierCapError,
    EffectTopoError,
    LoweringError,
    ScenarioFormatError,
)
from .matrices import DEFAULT_TOL, Tolerances

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

_DOT_CAPABLE = {"validate", "relations"}


def _add_global_flags(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    """The shared flags, legal both before and after the subcommand.

    On subparsers the defaults are suppressed so an absent flag leaves the
    value parsed at the top level intact instead of overwriting it.
    """

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--format",
        choices=("text", "json", "dot"),
        default=default("text"),
        help="output format (dot only for validate and relations)",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=default(None),
        metavar="EPS",
        help="override every numerical tolerance with one value",
    )
    parser.add_argument(
        "--seed", type=int, default=default(7), help="seed for randomised checks"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effecttopo",
        description="finite effect-algebra topologies and operator-family checks",
    )
    _add_global_flags(parser, suppress=False)
    shared = argparse.ArgumentParser(add_help=False)
    _add_global_flags(shared, suppress=True)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "validate", help="check a .ea table against the axioms", parents=[shared]
    )
    p.add_argument("file", help="path to the .ea file")

    p = sub.add_parser(
        "topology", help="closed-set families of a finite table", parents=[shared]
    )
    p.add_argument("file", help="path to the .ea file")
    p.add_argument(
        "--kind",
        choices=("order", "interval"),
        default="order",
        help="which topology to compute",
    )
    p.add_argument(
        "--compare",
        action="store_true",
        help="compute both topologies and report their containment",
    )
    p.add_argument(
        "--carrier-cap",
        type=int,
        default=topology.DEFAULT_TOPOLOGY_CAP,
        help="refuse carriers larger than this",
    )

    p = sub.add_parser(
        "verify-example",
        help="run one counterexample family's battery",
        parents=[shared],
    )
    p.add_argument("number", choices=("3", "4", "5"), help="which family")
    p.add_argument("--n-max", type=int, default=1000, help="largest family index checked")
    p.add_argument(
        "--grid-steps",
        type=int,
        default=100,
        help="resolution of the bound/floor parameter grids",
    )

    p = sub.add_parser(
        "vigier", help="monotone-chain and squeeze convergence checks", parents=[shared]
    )
    p.add_argument(
        "--scenario",
        default=None,
        help="builtin scenario name or path to a JSON scenario (default: all builtins)",
    )
    p.add_argument("--n-max", type=int, default=1000, help="largest chain index checked")

    p = sub.add_parser(
        "relations", help="evidence-backed topology containment graph", parents=[shared]
    )
    p.add_argument(
        "--ambient",
        choices=("eh", "ph"),
        required=True,
        help="eh = all effects, ph = projections only",
    )
    p.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="shrink evidence index ranges by this factor (speed/coverage trade)",
    )
    return parser


def _tolerances(args) -> Tolerances:
    if args.tol is None:
        return DEFAULT_TOL
    if args.tol <= 0:
        raise ValueError("--tol must be positive")
    t = args.tol
    return Tolerances(herm=t, psd=t, idem=t, conv=t)


def _load_algebra(path: str, out, *, carrier_cap=None):
    """Parse + lower a .ea file; returns (algebra, exit code or None)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None, EXIT_USAGE
    outcome = eaformat.parse_ea(text)
    for diag in outcome.diagnostics:
        print(f"{path}:{diag}", file=out if diag.severity == "warning" else sys.stderr)
    if outcome.document is None:
        return None, EXIT_USAGE
    try:
        kwargs = {} if carrier_cap is None else {"carrier_cap": carrier_cap}
        return eaformat.lower(outcome.document, **kwargs), None
    except (LoweringError, CarrierCapError, EffectTopoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_USAGE


def _cmd_validate(args, out) -> int:
    alg, code = _load_algebra(args.file, out)
    if alg is None:
        return code
    report = alg.validate()
    if args.format == "json":
        payload = {
            "file": args.file,
            "name": alg.name,
            "elements": list(alg.labels),
            "valid": report.ok,
            "violations": [
                {
                    "axiom": v.axiom,
                    "witness": [alg.label(i) for i in v.witness],
                    "message": v.message,
                }
                for v in report.violations
            ],
        }
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    elif args.format == "dot":
        if not report.ok:
            print("error: cannot draw the order of an invalid table", file=sys.stderr)
            return EXIT_CHECK_FAILED
        out.write(f'digraph "{alg.name or args.file}" {{\n  rankdir=BT;\n')
        for i, label in enumerate(alg.labels):
            shape = "doublecircle" if i in (alg.zero, alg.one) else "circle"
            out.write(f'  n{i} [label="{label}", shape={shape}];\n')
        for a, b in alg.hasse_edges():
            out.write(f"  n{a} -> n{b};\n")
        out.write("}\n")
    else:
        out.write(f"algebra: {alg.name}  ({alg.n} elements)\n")
        if report.ok:
            out.write("valid: yes\n")
        else:
            out.write("valid: no\n")
            for v in report.violations:
                names = ", ".join(alg.label(i) for i in v.witness)
                out.write(f"  {v.axiom} fails at ({names}): {v.message}\n")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_topology(args, out) -> int:
    alg, code = _load_algebra(args.file, out, carrier_cap=args.carrier_cap)
    if alg is None:
        return code
    if not alg.validate().ok:
        print("error: table violates the axioms; run validate for details", file=sys.stderr)
        return EXIT_CHECK_FAILED
    try:
        fams = {}
        if args.kind == "order" or args.compare:
            fams["order"] = topology.order_topology(alg, carrier_cap=args.carrier_cap)
        if args.kind == "interval" or args.compare:
            fams["interval"] = topology.interval_topology(alg, carrier_cap=args.carrier_cap)
    except CarrierCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    chosen = fams[args.kind]
    verdict = (
        topology.compare_topologies(fams["interval"], fams["order"])
        if args.compare
        else None
    )
    if args.format == "json":
        payload = {
            "file": args.file,
            "kind": args.kind,
            "count": len(chosen.masks),
            "discrete": chosen.is_discrete(),
        }
        if len(chosen.masks) <= 4096:
            payload.update(chosen.to_json_dict(alg.labels))
        if verdict is not None:
            payload["interval_vs_order"] = verdict
            payload["interval_count"] = len(fams["interval"].masks)
            payload["order_count"] = len(fams["order"].masks)
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(f"algebra: {alg.name}  ({alg.n} elements)\n")
        out.write(f"{args.kind} topology: {len(chosen.masks)} closed sets\n")
        out.write(f"discrete: {'yes' if chosen.is_discrete() else 'no'}\n")
        if verdict is not None:
            out.write(
                f"interval vs order: {verdict} "
                f"({len(fams['interval'].masks)} vs {len(fams['order'].masks)} closed sets)\n"
            )
    return EXIT_OK


def _example_battery(number: str, n_max: int, grid_steps: int, tol: Tolerances):
    """(check name, passed) pairs for one counterexample family."""
    import math

    fam = families.family(f"example{number}")
    checks: list[tuple[str, bool]] = []
    if number in ("3", "5"):
        worst = max(
            abs(families.norm_distance(fam, n, tol) - math.sin(1.0 / n))
            for n in range(1, n_max + 1)
        )
        checks.append((f"norm distance matches sin(1/n) to {worst:.2e}", worst <= 1e-10))
    if number == "3":
        grid = [k / grid_steps for k in range(grid_steps)]
        ok = all(
            families.upper_bound_obstruction(n, c, tol)
            for n in range(1, n_max + 1)
            for c in grid
        )
        checks.append(("every strict upper bound below the top is obstructed", ok))
    if number == "4":
        e0 = families.SparseVector.basis(0)
        ok = all(
            abs(families.sot_residual(fam, n, e0) - 0.5) <= 1e-12
            for n in range(2, n_max + 1)
        )
        checks.append(("strong residual at e0 stays exactly 1/2", ok))
        corpus = families.sparse_test_corpus()
        ok = True
        for x in corpus:
            for y in corpus:
                tail = max(x.support + y.support, default=0) + 2
                if families.wot_residual(fam, tail, x, y) != 0.0:
                    ok = False
        checks.append(("weak residuals vanish beyond the supports", ok))
        ok = all(
            families.norm_distance(fam, n, tol) >= 0.5 - 1e-12
            for n in range(2, min(n_max, 400) + 1)
        )
        checks.append(("norm distance never drops below 1/2", ok))
    if number == "5":
        floors = sorted({k / grid_steps for k in range(1, grid_steps + 1)} | {1e-6, 1e-3})
        ok = all(
            families.interval_floor_obstruction(n, r)
            for n in range(1, n_max + 1)
            for r in floors
        )
        checks.append(("every nonzero interval floor is refused", ok))
    return checks


def _cmd_verify_example(args, out) -> int:
    if args.n_max < 1 or args.grid_steps < 1:
        print("error: --n-max and --grid-steps must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    tol = _tolerances(args)
    checks = _example_battery(args.number, args.n_max, args.grid_steps, tol)
    passed = all(ok for _, ok in checks)
    if args.format == "json":
        payload = {
            "example": int(args.number),
            "n_max": args.n_max,
            "passed": passed,
            "checks": [{"name": name, "passed": ok} for name, ok in checks],
        }
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(f"example {args.number} (n up to {args.n_max})\n")
        for name, ok in checks:
            out.write(f"  {'pass' if ok else 'FAIL'}  {name}\n")
        out.write(f"result: {'PASS' if passed else 'FAIL'}\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _resolve_scenarios(selector: str | None):
    if selector is None:
        return families.builtin_scenarios()
    for sf in families.builtin_scenarios():
        if sf.name == selector:
            return [sf]
    return [families.load_scenario(selector)]


def _cmd_vigier(args, out) -> int:
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    tol = _tolerances(args)
    try:
        scenarios = _resolve_scenarios(args.scenario)
    except (OSError, json.JSONDecodeError, ScenarioFormatError) as exc:
        print(f"error: cannot load scenario: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = []
    for sf in scenarios:
        reports.append(families.vigier_check(sf, args.n_max, tol=tol))
        reports.append(families.squeeze_sot_check(sf, args.n_max, tol=tol))
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "n_max": args.n_max,
            "passed": passed,
            "reports": [r.to_json_dict() for r in reports],
        }
        json.dump(payload, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        for r in reports:
            out.write(f"{r.scenario} / {r.kind}: {'PASS' if r.passed else 'FAIL'}\n")
            for s in r.stages:
                line = f"  {'pass' if s.passed else 'FAIL'}  {s.name}"
                if s.detail:
                    line += f"  ({s.detail})"
                out.write(line + "\n")
        out.write(f"result: {'PASS' if passed else 'FAIL'}\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _cmd_relations(args, out) -> int:
    if args.scale <= 0:
        print("error: --scale must be positive", file=sys.stderr)
        return EXIT_USAGE
    tol = _tolerances(args)
    ambient = {"eh": "E(H)", "ph": "P(H)"}[args.ambient]
    results = relations.collect_evidence(scale=args.scale, seed=args.seed, tol=tol)
    report = relations.build_relation_report(ambient, results)
    out.write(relations.render(report, args.format))
    return EXIT_OK if report.summary == "PASS" else EXIT_CHECK_FAILED


_COMMANDS = {
    "validate": _cmd_validate,
    "topology": _cmd_topology,
    "verify-example": _cmd_verify_example,
    "vigier": _cmd_vigier,
    "relations": _cmd_relations,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else int(exc.code or 0)
    if args.format == "dot" and args.command not in _DOT_CAPABLE:
        print(f"error: --format dot is not supported by {args.command}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EffectTopoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
