#!/usr/bin/env python3
"""
Webflat command line
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from config import configure_logging, settings
from schemas.reports import CatalogReportResponse, FixtureReportResponse
from services import compute_guard
from services.catalog_service import CatalogService
from services.errors import WebflatError
from services.report_service import ReportService

logger = logging.getLogger("webflat.cli")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--timeout-seconds", type=float, default=settings.WEBFLAT_TIMEOUT_SECONDS,
                        help="cooperative deadline, 0 for none")
    common.add_argument("--log-level", default=settings.LOG_LEVEL)

    parser = argparse.ArgumentParser(prog="webflat", description="Exact algebra for planar foliations and their Legendre webs")
    commands = parser.add_subparsers(dest="command", required=True)

    def chart_option(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--chart", type=int, choices=(1, 2, 3), default=settings.WEBFLAT_DEFAULT_CHART)

    legendre = commands.add_parser("legendre", parents=[common], help="Legendre web of a foliation")
    legendre.add_argument("--form", required=True)
    chart_option(legendre)

    for name, text in (("curvature", "curvature of a 3-web"), ("flat", "is a 3-web flat")):
        sub = commands.add_parser(name, parents=[common], help=text)
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--form", help="1-form whose Legendre web is used")
        source.add_argument("--web", help="web equation F(x, y, p) with p = dy/dx")
        chart_option(sub)
    commands.choices["flat"].add_argument("--assert-flat", action="store_true",
                                          help="exit 1 when the web is not flat")

    analyze = commands.add_parser("analyze", parents=[common], help="singularities, invariant lines and inflection")
    analyze.add_argument("--form", required=True)

    homog = commands.add_parser("homog", parents=[common], help="type and flatness of a homogeneous foliation")
    homog.add_argument("--form", required=True)

    verify = commands.add_parser("verify-catalog", parents=[common], help="recompute every fixture expectation")
    verify.add_argument("--all", action="store_true", help="include auxiliary fixtures and families")
    verify.add_argument("--fixture", help="verify a single fixture")
    return parser


def _emit(payload, as_json: bool, lines: List[str]) -> None:
    if as_json:
        print(json.dumps(payload.model_dump(), indent=2))
    else:
        print("\n".join(lines))


def _run(args: argparse.Namespace) -> int:
    reports = ReportService()
    if args.command == "legendre":
        web = reports.legendre_report(args.form, args.chart)
        _emit(web, args.json, [f"chart {web.chart}, {web.order}-web in {web.fiber}:", web.equation])
        return 0

    if args.command == "curvature":
        curvature = reports.curvature_report(args.form, args.web, args.chart)
        _emit(curvature, args.json, [
            f"flat: {str(curvature.flat).lower()}",
            f"numerator: {curvature.numerator}",
            f"denominator: {curvature.denominator}",
        ])
        return 0

    if args.command == "flat":
        flat = reports.flat_report(args.form, args.web, args.chart)
        _emit(flat, args.json, [f"flat: {str(flat.flat).lower()}"])
        return 1 if args.assert_flat and not flat.flat else 0

    if args.command == "analyze":
        report = reports.analyze_report(args.form)
        lines = [f"degree: {report.degree}", f"singular points: {len(report.singularities)}"]
        for s in report.singularities:
            milnor = "?" if s.milnor is None else s.milnor
            lines.append(f"  [{':'.join(s.point)}] nu={s.nu} tau={s.tau} milnor={milnor} radial_order={s.radial_order}"
                         + (f" BB={s.bb}" if s.bb is not None else ""))
            for entry in s.cs:
                lines.append(f"    CS({entry.line}) = {entry.value}")
        if report.inflection:
            lines.append(f"convex: {str(report.convex).lower()}")
            lines.append(f"invariant lines: {len(report.invariant_lines)}")
            for entry in report.inflection.inv:
                lines.append(f"  invariant: ({entry.factor})^{entry.order}")
            for entry in report.inflection.tr:
                lines.append(f"  transverse: ({entry.factor})^{entry.order}")
        for residual in report.unresolved:
            lines.append(f"unresolved: {residual}")
        _emit(report, args.json, lines)
        return 0

    if args.command == "homog":
        report = reports.homogeneous_report(args.form)
        flat = "unknown" if report.flat_criterion is None else str(report.flat_criterion).lower()
        _emit(report, args.json, [
            f"degree: {report.degree}",
            f"type: {report.type}",
            f"C_H: {report.C_H}",
            f"D_H: {report.D_H}",
            f"cs_poly: {report.cs_polynomial}",
            f"convex: {str(report.convex).lower()}",
            f"flat: {flat}",
        ])
        return 0

    if args.command == "verify-catalog":
        return _verify(args)
    raise WebflatError(f"unknown command '{args.command}'")


def _verify(args: argparse.Namespace) -> int:
    catalog = CatalogService()
    if args.fixture:
        fixture = catalog.get_fixture(args.fixture)
        with compute_guard.limits(timeout_seconds=args.timeout_seconds):
            report = catalog.verify_fixture(fixture)
        payload = FixtureReportResponse.from_report(report)
        lines = [f"{report.fixture_id}: {'PASS' if report.passed else 'FAIL'}"]
        lines += [f"  {c.name}: expected {c.expected}, got {c.actual}" for c in report.checks if not c.passed]
        if report.error:
            lines.append(f"  error: {report.error}")
        _emit(payload, args.json, lines)
        return 0 if report.passed else 1
    report = catalog.verify_catalog(include_aux=args.all, timeout_seconds=args.timeout_seconds)
    lines = []
    for fixture_report in report.reports:
        lines.append(f"{fixture_report.fixture_id}: {'PASS' if fixture_report.passed else 'FAIL'}")
        lines += [f"  {c.name}: expected {c.expected}, got {c.actual}" for c in fixture_report.checks if not c.passed]
        if fixture_report.error:
            lines.append(f"  error: {fixture_report.error}")
    lines.append(f"{report.passed}/{report.total} PASS")
    _emit(CatalogReportResponse.from_report(report), args.json, lines)
    return 0 if report.all_passed else 1


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    # verify-catalog applies the deadline per fixture
    timeout = None if args.command == "verify-catalog" else args.timeout_seconds
    try:
        with compute_guard.limits(timeout_seconds=timeout):
            return _run(args)
    except WebflatError as e:
        print(f"error: {e}", file=sys.stderr)
        logger.debug(f"❌ {type(e).__name__}", exc_info=True)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
