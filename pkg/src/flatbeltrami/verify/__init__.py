"""Verification suites and the report they produce."""

from flatbeltrami.verify.calculus import suite_calculus_lemma
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.flatness import suite_flatness
from flatbeltrami.verify.growth import suite_q22_growth
from flatbeltrami.verify.oracle import suite_fd_oracle
from flatbeltrami.verify.ratio import suite_ratio_loglog, suite_ratio_rosay
from flatbeltrami.verify.report import SuiteRecord, VerificationReport
from flatbeltrami.verify.runner import SUITE_NAMES, run_suites
from flatbeltrami.verify.smoothness import suite_smoothness_criterion

__all__ = [
    "SuiteConfig",
    "SuiteRecord",
    "VerificationReport",
    "SUITE_NAMES",
    "run_suites",
    "suite_ratio_rosay",
    "suite_ratio_loglog",
    "suite_flatness",
    "suite_smoothness_criterion",
    "suite_q22_growth",
    "suite_fd_oracle",
    "suite_calculus_lemma",
]
