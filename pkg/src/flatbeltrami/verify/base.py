"""Base suite logic: sample grid, ordered parallel evaluation, trend tests."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Sequence, TypeVar

from flatbeltrami.config import RADIUS_FRACTIONS
from flatbeltrami.logscalar import LogComplex
from flatbeltrami.scheme import Scheme
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class SamplePoint:
    n: int
    radius_fraction: float
    angle: float
    z: LogComplex


def sample_grid(s: Scheme, n: int, angles: int, fractions: Sequence[float] = RADIUS_FRACTIONS) -> List[SamplePoint]:
    """Radii at the given fractions of Aₙ's radial span times equally spaced angles."""
    annulus = s.annulus(n)
    points = []
    for fraction in fractions:
        log_r = annulus.log_radius_at(fraction)
        for m in range(angles):
            angle = 2.0 * math.pi * m / angles
            points.append(SamplePoint(n, fraction, angle, LogComplex(log_r, angle)))
    return points


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int) -> List[R]:
    """map() on a thread pool; results come back in input order."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def decreasing_from(values: Sequence[Optional[float]]) -> Optional[int]:
    """Smallest index i such that the defined values from i to the end strictly decrease.

    Returns None when the last value is undefined.
    """
    if not values or values[-1] is None:
        return None
    start = len(values) - 1
    while start > 0 and values[start - 1] is not None and values[start - 1] > values[start]:
        start -= 1
    return start


def increasing_from(values: Sequence[Optional[float]]) -> Optional[int]:
    negated = [None if v is None else -v for v in values]
    return decreasing_from(negated)


def half_split(items: Sequence[T]) -> tuple[Sequence[T], Sequence[T]]:
    mid = len(items) // 2
    return items[:mid], items[mid:]


def no_upward_trend(per_n: Sequence[float], margin: float) -> tuple[bool, float, float]:
    """Last-half sup against first-half sup; passes when it grows by at most ``margin``."""
    first, last = half_split(per_n)
    first_sup = max(first) if first else max(per_n)
    last_sup = max(last)
    if first_sup <= 0.0:
        return last_sup <= 0.0, first_sup, last_sup
    return last_sup <= (1.0 + margin) * first_sup, first_sup, last_sup


class Suite:
    """Abstract base for verification suites."""

    name = "suite"

    def __init__(self, cfg: SuiteConfig, scheme: Optional[Scheme] = None) -> None:
        self.cfg = cfg
        self.scheme = scheme or Scheme(cfg.kind)
        self.record = SuiteRecord(self.name)
        self.completed = False

    @property
    def n_values(self) -> List[int]:
        lo, hi = self.cfg.range_for(self.name)
        return list(range(lo, hi + 1))

    def run(self) -> SuiteRecord:
        self.scheme.prefill(self.n_values[-1] + 2)
        self.collect()
        self.judge()
        self.record.verdict = all(self.record.checks.values()) if self.record.checks else False
        for line in self.get_summary():
            logger.debug("%s %s", self.name, line)
        self.completed = True
        return self.record

    def collect(self) -> None:
        raise NotImplementedError

    def judge(self) -> None:
        raise NotImplementedError

    def check(self, label: str, passed: bool) -> None:
        self.record.checks[label] = bool(passed)
        if not passed:
            logger.info("%s: check %s failed", self.name, label)

    def get_summary(self) -> list[str]:
        """Return one line per check for the log."""
        lines = [f"{label}: {'ok' if ok else 'FAILED'}" for label, ok in self.record.checks.items()]
        if not lines:
            lines = [f"{self.name} recorded no checks."]
        return lines


__all__ = [
    "Suite",
    "SamplePoint",
    "sample_grid",
    "ordered_map",
    "decreasing_from",
    "increasing_from",
    "half_split",
    "no_upward_trend",
]
