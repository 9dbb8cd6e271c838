"""Entrypoint for the flatbeltrami command line."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from flatbeltrami.errors import ConfigurationError, DomainError, SettingsError
from flatbeltrami.scheme import SchemeKind

EXIT_USAGE = 2
EXIT_IO = 3


def _add_scheme(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", choices=[k.value for k in SchemeKind], default=SchemeKind.LOGLOG.value, help="Which annular construction to use")


def _add_range(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-min", type=int, default=None, help="First annulus index (default from data/verify.json)")
    parser.add_argument("--n-max", type=int, default=None, help="Last annulus index (default from data/verify.json)")
    parser.add_argument("--angles", type=int, default=None, help="Equally spaced angles per sampled radius")
    parser.add_argument("--workers", type=int, default=None, help="Threads for sample-point evaluation")


def build_parser() -> argparse.ArgumentParser:
    from flatbeltrami.verify.config import DEFAULT_TOLERANCES

    parser = argparse.ArgumentParser(prog="flatbeltrami", description="Evaluate, scan and verify the flat Beltrami construction")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="Print the jet of u and the matrix Q at one point")
    _add_scheme(p_eval)
    p_eval.add_argument("--r", type=float, required=True, help="|z|")
    p_eval.add_argument("--theta", type=float, default=0.0, help="arg z in radians")

    p_scan = sub.add_parser("scan", help="Write a CSV scan over the sample grid")
    _add_scheme(p_scan)
    _add_range(p_scan)
    p_scan.add_argument("--no-dq22", action="store_true", help="Leave the log_dq22 column empty")
    p_scan.add_argument("--out", required=True, help="CSV output path")

    p_verify = sub.add_parser("verify", help="Run verification suites and write a JSON report")
    _add_scheme(p_verify)
    _add_range(p_verify)
    p_verify.add_argument("--k-max", type=int, default=None, help="Highest order k for flatness and smoothness")
    p_verify.add_argument("--suite", action="append", default=None, help="Suite name (repeatable); default runs every applicable suite")
    p_verify.add_argument("--no-fd", action="store_true", help="Skip the finite-difference oracle suite")
    p_verify.add_argument("--out", default=None, help="JSON output path (stdout when omitted)")
    for name in DEFAULT_TOLERANCES:
        p_verify.add_argument(f"--tol-{name.replace('_', '-')}", dest=f"tol_{name}", type=float, default=None, help=f"Override tolerance {name}")

    p_plot = sub.add_parser("plot", help="Render an SVG chart from a CSV file")
    p_plot.add_argument("--in", dest="input", required=True, help="CSV input path")
    p_plot.add_argument("--x", required=True, help="Column for the horizontal axis")
    p_plot.add_argument("--y", required=True, help="Column for the vertical axis")
    p_plot.add_argument("--out", required=True, help="SVG output path")
    p_plot.add_argument("--logscale", action="store_true", help="Symmetric log scale on the vertical axis")
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    from flatbeltrami import cli

    handlers = {"eval": cli.cmd_eval, "scan": cli.cmd_scan, "verify": cli.cmd_verify, "plot": cli.cmd_plot}
    try:
        return handlers[args.command](args)
    except (DomainError, ConfigurationError, SettingsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
