"""
Command-line entry point: `python -m ehrlab <command> ...`.

Exit codes: 0 when every checked claim holds, 1 when a verification fails,
2 for bad input (including argparse usage errors).
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel

from . import render
from .catalog import EXAMPLE_IDS, IDP_POINTS, IDP_POLYTOPE, run_example
from .config import Settings, get_settings
from .errors import EhrlabError, FixtureError
from .gt import Partition, ehrhart_gt, load_counterexample_fixtures, verify_counterexample_36
from .hull import IdpViolation, VPolytope, contains, decompose_as_sum, idp_check, partition_polytope
from .poset import (
    Poset,
    YoungShape,
    ehrhart_order_polytope,
    hook_formula_count,
    hook_multiset_shape,
    hook_multiset_tree,
    linear_extensions,
    load_poset,
    load_tree,
    poset_from_shape,
    slice_count,
    tree_hook_count,
)
from .reports import (
    CountReport,
    IdpReport,
    IdpViolationModel,
    MembershipCertificateModel,
    PolynomialReport,
    ScanReport,
)
from .search import MAX_IDP_A, MAX_IDP_B, MAX_POSET_SIZE, scan_idp_partition_polytopes, scan_negative_coefficients
from .telemetry import configure_logging, configure_tracing, get_tracer

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

DEFAULT_SCAN_SIZE = 6
DEFAULT_IDP_GRID = (8, 4)


# =============================================================================
# Argument parsing
# =============================================================================

def _add_source(parser: argparse.ArgumentParser, tree: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--shape", help="Young shape as comma-separated parts, e.g. 8,5,4")
    group.add_argument("--poset", type=Path, help="poset file (first line n, then 'a < b' lines)")
    if tree:
        group.add_argument("--tree", type=Path, help="tree file (first line n, then 'child parent' lines)")


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="ehrlab",
        description="Exact Ehrhart polynomials of order and Gelfand-Tsetlin polytopes",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: EHRLAB_JOBS)")
    parser.add_argument("--long", action="store_true", help="enable long-running checks")
    sub = parser.add_subparsers(dest="command", required=True)

    example = sub.add_parser("example", help="reproduce a published example")
    example.add_argument("id", choices=EXAMPLE_IDS)
    example.add_argument("--ell", type=int, default=None)
    example.add_argument("--max-dilate", type=int, default=None)
    example.add_argument("--fixtures", type=Path, default=None)

    ehrhart = sub.add_parser("ehrhart", help="Ehrhart polynomial of an order or GT polytope")
    group = ehrhart.add_mutually_exclusive_group(required=True)
    group.add_argument("--shape")
    group.add_argument("--poset", type=Path)
    group.add_argument("--tree", type=Path)
    group.add_argument("--gt", action="store_true")
    ehrhart.add_argument("--lambda", dest="lam", help="top row, e.g. 2,1,0")
    ehrhart.add_argument("--mu", help="bottom row (default: zeros)")
    ehrhart.add_argument("--rows", type=int, help="number of pattern rows R (m = R - 1)")

    hooks = sub.add_parser("hooks", help="hook multiset of a shape or rooted tree")
    group = hooks.add_mutually_exclusive_group(required=True)
    group.add_argument("--shape")
    group.add_argument("--tree", type=Path)

    linext = sub.add_parser("linext", help="number of linear extensions")
    _add_source(linext)

    slices = sub.add_parser("slice", help="lattice points of the slice sum(x) = 1 of O(P), dilates 0..K")
    _add_source(slices)
    slices.add_argument("--max-k", type=int, default=5)

    idp = sub.add_parser("idp", help="IDP check of the partition polytope P_{a,b}")
    idp.add_argument("--a", type=int, required=True)
    idp.add_argument("--b", type=int, required=True)
    idp.add_argument("--k", type=int, default=2)
    idp.add_argument("--point", help="check one integer point x of the k-th dilate, e.g. 6,6,6,6,4,4,2,1,1")

    verify = sub.add_parser("gt-verify", help="verify the GT counterexample fixtures")
    verify.add_argument("--fixtures", type=Path, default=None)

    scan = sub.add_parser("scan", help="batch scans")
    kinds = scan.add_subparsers(dest="kind", required=True)
    posets = kinds.add_parser("posets", help="negative Ehrhart coefficients of order polytopes")
    posets.add_argument("--max-size", type=int, default=None)
    grid = kinds.add_parser("idp", help="IDP of partition polytopes over a grid")
    grid.add_argument("--max-a", type=int, default=None)
    grid.add_argument("--max-b", type=int, default=None)
    grid.add_argument("--k", type=int, default=2)
    return parser.parse_args(argv)


# =============================================================================
# Commands
# =============================================================================

def _emit(args: argparse.Namespace, model: BaseModel, text: str) -> None:
    print(model.model_dump_json(indent=2) if args.json else text)


def _color() -> bool:
    return sys.stdout.isatty()


def _load_source(args: argparse.Namespace) -> Tuple[str, Poset]:
    if args.shape:
        return f"shape ({args.shape})", poset_from_shape(YoungShape.parse(args.shape))
    if args.poset:
        return f"poset {args.poset.name}", load_poset(args.poset)
    return f"tree {args.tree.name}", load_tree(args.tree).to_poset()


def _require_positive(value: int, flag: str) -> int:
    if value < 1:
        raise EhrlabError(f"{flag} must be positive, got {value}")
    return value


def _fixtures(args: argparse.Namespace, settings: Settings) -> Path:
    directory = args.fixtures or settings.fixtures_dir
    if not Path(directory).is_dir():
        raise FixtureError(f"fixture directory not found: {directory}")
    return Path(directory)


def cmd_example(args: argparse.Namespace, settings: Settings, jobs: int) -> int:
    report = run_example(args.id, _fixtures(args, settings), ell=args.ell, max_dilate=args.max_dilate,
                         long_run=args.long, jobs=jobs)
    _emit(args, report, render.render_example_report(report, _color()))
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_ehrhart(args: argparse.Namespace) -> int:
    if args.gt:
        if not args.lam or args.rows is None:
            raise EhrlabError("--gt needs --lambda and --rows")
        lam = Partition.parse(args.lam)
        mu = Partition.parse(args.mu) if args.mu else Partition.zeros(lam.width)
        subject = f"GT polytope lambda=({args.lam}) mu=({','.join(map(str, mu.parts))}) rows={args.rows}"
        poly = ehrhart_gt(lam, mu, args.rows - 1)
    else:
        subject, poset = _load_source(args)
        poly = ehrhart_order_polytope(poset)
    report = PolynomialReport(subject=subject, coefficients=poly.to_json(), rendered=poly.render())
    _emit(args, report, render.render_polynomial_report(report))
    return EXIT_PASS


def cmd_hooks(args: argparse.Namespace) -> int:
    if args.shape:
        subject, hooks = f"shape ({args.shape})", hook_multiset_shape(YoungShape.parse(args.shape))
    else:
        subject, hooks = f"tree {args.tree.name}", hook_multiset_tree(load_tree(args.tree))
    report = CountReport(subject=subject, quantity="hook multiset", values=[str(h) for h in hooks.values])
    _emit(args, report, render.render_count_report(report))
    return EXIT_PASS


def cmd_linext(args: argparse.Namespace) -> int:
    subject, poset = _load_source(args)
    count = linear_extensions(poset)
    if args.shape:
        via_hooks = hook_formula_count(YoungShape.parse(args.shape))
    elif args.tree:
        via_hooks = tree_hook_count(load_tree(args.tree))
    else:
        via_hooks = count
    report = CountReport(subject=subject, quantity="linear extensions", values=[str(count)])
    _emit(args, report, render.render_count_report(report))
    if via_hooks != count:
        logger.error(f"hook formula gives {via_hooks}, ideal-lattice count gives {count}")
        return EXIT_FAIL
    return EXIT_PASS


def cmd_slice(args: argparse.Namespace) -> int:
    subject, poset = _load_source(args)
    values = [f"k={k}: {slice_count(poset, k)}" for k in range(args.max_k + 1)]
    report = CountReport(subject=subject, quantity="slice lattice points", values=values)
    _emit(args, report, render.render_count_report(report))
    return EXIT_PASS


def _parse_point(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise EhrlabError(f"point must be comma-separated integers, got {text!r}") from None


def _check_point(args: argparse.Namespace, poly: VPolytope, subject: str) -> IdpReport:
    """x/k in P, and if so, whether x splits into k lattice points of P."""
    point = _parse_point(args.point)
    cert = contains(poly, [Fraction(v, args.k) for v in point])
    violations, parts = [], None
    if cert.inside:
        # Lattice points of a partition polytope are exactly its generators.
        decomposition = decompose_as_sum(point, poly, args.k, lattice_points=poly.generators)
        if decomposition.found:
            parts = [[str(x) for x in part] for part in decomposition.parts]
        else:
            violations = [IdpViolationModel.from_violation(IdpViolation(args.k, point, decomposition.examined))]
    return IdpReport(
        subject=subject,
        dilate=args.k,
        passed=not violations,
        violations=violations,
        point=[str(x) for x in point],
        certificate=MembershipCertificateModel.from_certificate(cert),
        parts=parts,
    )


def cmd_idp(args: argparse.Namespace, jobs: int) -> int:
    _require_positive(args.k, "--k")
    poly = partition_polytope(_require_positive(args.a, "--a"), _require_positive(args.b, "--b"))
    subject = f"P_{{{args.a},{args.b}}}"
    if args.point:
        report = _check_point(args, poly, subject)
    else:
        violations = idp_check(poly, args.k, jobs=jobs)
        report = IdpReport(
            subject=subject,
            dilate=args.k,
            passed=not violations,
            violations=[IdpViolationModel.from_violation(v) for v in violations],
        )
    _emit(args, report, render.render_idp_report(report, _color()))
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_gt_verify(args: argparse.Namespace, settings: Settings) -> int:
    patterns = load_counterexample_fixtures(_fixtures(args, settings) / "gt_counterexample")
    report = verify_counterexample_36(patterns)
    _emit(args, report, render.render_verification_report(report, _color()))
    return EXIT_PASS if report.passed else EXIT_FAIL


def _idp_scan_matches_claims(report: ScanReport, max_a: int, max_b: int) -> bool:
    """Failures may only occur at P_{18,9}, and there they must include the known points."""
    a, b = IDP_POLYTOPE
    boundary = f"P_{{{a},{b}}}"
    if any(v.subject != boundary for v in report.violations):
        return False
    if max_a < a or max_b < b or report.scope.get("dilate") != "2":
        return True
    found = {tuple(int(x) for x in v.values) for v in report.violations}
    return all(p in found for p in IDP_POINTS)


def cmd_scan(args: argparse.Namespace, jobs: int) -> int:
    if args.kind == "posets":
        default_size = MAX_POSET_SIZE if args.long else DEFAULT_SCAN_SIZE
        max_size = _require_positive(default_size if args.max_size is None else args.max_size, "--max-size")
        report = scan_negative_coefficients(max_size, jobs=jobs)
        passed = report.passed
    else:
        default_a, default_b = (MAX_IDP_A, MAX_IDP_B) if args.long else DEFAULT_IDP_GRID
        max_a = _require_positive(default_a if args.max_a is None else args.max_a, "--max-a")
        max_b = _require_positive(default_b if args.max_b is None else args.max_b, "--max-b")
        _require_positive(args.k, "--k")
        report = scan_idp_partition_polytopes(max_a, max_b, k=args.k, jobs=jobs)
        passed = _idp_scan_matches_claims(report, max_a, max_b)
    _emit(args, report, render.render_scan_report(report, _color()))
    return EXIT_PASS if passed else EXIT_FAIL


# =============================================================================
# Main
# =============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    settings = get_settings()
    configure_logging(settings.log_level)
    configure_tracing(settings)
    jobs = args.jobs if args.jobs is not None else settings.jobs
    if jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_ERROR

    tracer = get_tracer(__name__)
    with tracer.start_as_current_span(f"cli.{args.command}") as span:
        span.set_attribute("cli.json", args.json)
        span.set_attribute("cli.jobs", jobs)
        try:
            if args.command == "example":
                code = cmd_example(args, settings, jobs)
            elif args.command == "ehrhart":
                code = cmd_ehrhart(args)
            elif args.command == "hooks":
                code = cmd_hooks(args)
            elif args.command == "linext":
                code = cmd_linext(args)
            elif args.command == "slice":
                code = cmd_slice(args)
            elif args.command == "idp":
                code = cmd_idp(args, jobs)
            elif args.command == "gt-verify":
                code = cmd_gt_verify(args, settings)
            else:
                code = cmd_scan(args, jobs)
        except EhrlabError as e:
            span.record_exception(e)
            logger.error(f"{args.command} failed: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_ERROR
        except (OSError, ValueError) as e:
            span.record_exception(e)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_ERROR
        span.set_attribute("cli.exit_code", code)
    return code
