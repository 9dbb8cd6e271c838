"""Subcommand handlers: eval, scan, verify, plot."""

from __future__ import annotations

import argparse
import logging
import pathlib
import sys
from typing import TextIO

from flatbeltrami.beltrami import dq22_dzbar, q_matrix
from flatbeltrami.errors import DomainError
from flatbeltrami.logscalar import LogComplex
from flatbeltrami.mapping import JET_ENTRIES, log_ratio, u_jet
from flatbeltrami.plotting import plot_csv
from flatbeltrami.scan import scan, write_scan_csv
from flatbeltrami.scheme import Scheme
from flatbeltrami.verify.config import DEFAULT_TOLERANCES, SuiteConfig
from flatbeltrami.verify.runner import run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SUITE_FAILED = 1


def _fmt(value: LogComplex) -> str:
    return f"({value.log_mag:.17g}, {value.phase:.17g})"


def cmd_eval(args: argparse.Namespace, out: TextIO | None = None) -> int:
    """Print the annulus index, every jet entry and the coefficient matrix at one point."""
    out = out or sys.stdout
    if args.r < 0.0:
        raise DomainError(f"--r must be a modulus, got {args.r!r}")
    s = Scheme(args.scheme)
    z = LogComplex.from_real_times_phase(args.r, args.theta)
    jet = u_jet(s, z)
    q = q_matrix(jet)
    lines = [f"scheme={s.kind.value}", f"n={jet.n}", f"parity={jet.parity}", f"p={jet.degree}"]
    for index in (1, 2):
        component = jet.component(index)
        for name in JET_ENTRIES:
            lines.append(f"u{index}.{name} = {_fmt(getattr(component, name))}")
    lines.append(f"reduced_zz = {_fmt(jet.reduced_zz)}")
    for name, entry in q.entries().items():
        lines.append(f"{name} = {_fmt(entry)}")
    lines.append(f"log_frobenius_sq = {q.log_frobenius_sq:.17g}")
    lines.append(f"log_ratio = {log_ratio(jet):.17g}")
    d = dq22_dzbar(jet)
    for name in ("total", "term1", "term2", "term3"):
        lines.append(f"dq22.{name} = {_fmt(getattr(d, name))}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _n_range(args: argparse.Namespace, default: tuple[int, int]) -> tuple[int, int] | None:
    if args.n_min is None and args.n_max is None:
        return None
    lo = args.n_min if args.n_min is not None else default[0]
    hi = args.n_max if args.n_max is not None else default[1]
    return lo, hi


def cmd_scan(args: argparse.Namespace) -> int:
    defaults = SuiteConfig.from_settings(args.scheme)
    lo, hi = _n_range(args, defaults.n_range) or defaults.n_range
    angles = args.angles if args.angles is not None else defaults.angle_samples
    rows = scan(Scheme(args.scheme), lo, hi, angles, include_dq22=not args.no_dq22, workers=args.workers or 1)
    write_scan_csv(rows, pathlib.Path(args.out))
    return EXIT_OK


def build_config(args: argparse.Namespace) -> SuiteConfig:
    """SuiteConfig from data/verify.json with every command-line override applied."""
    defaults = SuiteConfig.from_settings(args.scheme)
    tolerances = {}
    for name in DEFAULT_TOLERANCES:
        value = getattr(args, f"tol_{name}", None)
        if value is not None:
            tolerances[name] = value
    return SuiteConfig.from_settings(
        args.scheme,
        n_range=_n_range(args, defaults.n_range),
        angle_samples=args.angles,
        k_max=args.k_max,
        tolerances=tolerances,
        fd_enabled=False if args.no_fd else None,
        workers=args.workers,
    )


def cmd_verify(args: argparse.Namespace, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    cfg = build_config(args)
    report = run_suites(cfg, args.suite)
    text = report.to_json()
    if args.out:
        path = pathlib.Path(args.out)
        path.write_text(text, encoding="utf-8")
        logger.info("wrote report to %s", path)
    else:
        out.write(text)
    for record in report.records:
        if not record.verdict:
            failed = [label for label, ok in record.checks.items() if not ok]
            logger.warning("suite %s failed: %s", record.name, record.error or ", ".join(failed))
    return EXIT_OK if report.passed else EXIT_SUITE_FAILED


def cmd_plot(args: argparse.Namespace) -> int:
    plot_csv(pathlib.Path(args.input), args.x, args.y, pathlib.Path(args.out), logscale=args.logscale)
    return EXIT_OK


__all__ = ["cmd_eval", "cmd_scan", "cmd_verify", "cmd_plot", "build_config"]
