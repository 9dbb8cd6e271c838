"""Suite registry and ordered execution into a VerificationReport."""

from __future__ import annotations

import logging
import time
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from flatbeltrami.errors import DomainError
from flatbeltrami.scheme import SchemeKind
from flatbeltrami.verify.calculus import suite_calculus_lemma
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.flatness import suite_flatness
from flatbeltrami.verify.growth import suite_q22_growth
from flatbeltrami.verify.oracle import suite_fd_oracle
from flatbeltrami.verify.ratio import suite_ratio_loglog, suite_ratio_rosay
from flatbeltrami.verify.report import SuiteRecord, VerificationReport
from flatbeltrami.verify.smoothness import suite_smoothness_criterion

logger = logging.getLogger(__name__)

SuiteFn = Callable[[SuiteConfig], SuiteRecord]

_ALL = (SchemeKind.ROSAY, SchemeKind.LOGLOG)

# name -> (runner per scheme kind)
SUITES: Dict[str, Dict[SchemeKind, SuiteFn]] = {
    "ratio": {SchemeKind.ROSAY: suite_ratio_rosay, SchemeKind.LOGLOG: suite_ratio_loglog},
    "flatness": {kind: suite_flatness for kind in _ALL},
    "smoothness": {kind: suite_smoothness_criterion for kind in _ALL},
    "q22growth": {SchemeKind.LOGLOG: suite_q22_growth},
    "fdoracle": {kind: suite_fd_oracle for kind in _ALL},
    "calclemma": {kind: suite_calculus_lemma for kind in _ALL},
}
SUITE_NAMES: Tuple[str, ...] = tuple(SUITES)


def default_suites(kind: SchemeKind) -> List[str]:
    return [name for name, runners in SUITES.items() if kind in runners]


def resolve_suites(kind: SchemeKind, names: Optional[Iterable[str]]) -> List[str]:
    """Validate requested suite names, dropping duplicates but keeping order."""
    if not names:
        return default_suites(kind)
    resolved: List[str] = []
    for name in names:
        if name not in SUITES:
            raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
        if kind not in SUITES[name]:
            raise DomainError(f"suite {name!r} does not apply to the {kind.value} scheme")
        if name not in resolved:
            resolved.append(name)
    return resolved


def run_suite(cfg: SuiteConfig, name: str) -> SuiteRecord:
    """Run one suite; an exception becomes a failing record instead of aborting the report."""
    started = time.perf_counter()
    logger.info("suite %s (%s) started", name, cfg.kind.value)
    try:
        record = SUITES[name][cfg.kind](cfg)
    except Exception as exc:
        logger.exception("suite %s raised", name)
        record = SuiteRecord(name, verdict=False, error=f"{type(exc).__name__}: {exc}")
    logger.info(
        "suite %s finished: %s in %.2fs",
        name,
        "pass" if record.verdict else "fail",
        time.perf_counter() - started,
    )
    return record


def run_suites(cfg: SuiteConfig, names: Optional[Iterable[str]] = None) -> VerificationReport:
    report = VerificationReport(cfg)
    for name in resolve_suites(cfg.kind, names):
        report.records.append(run_suite(cfg, name))
    return report


__all__ = ["SUITES", "SUITE_NAMES", "default_suites", "resolve_suites", "run_suite", "run_suites"]
