"""Sequence data of the two annular constructions and the smoothness criterion."""

from __future__ import annotations

import logging
import math
import threading
from enum import Enum
from typing import Dict, List, Tuple

from flatbeltrami.cutoff import Annulus
from flatbeltrami.errors import DomainError
from flatbeltrami.logscalar import log_sum_exp

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)

# Annulus indices beyond this are not addressable with binary64 radii
MAX_INDEX = 10 ** 15


class SchemeKind(str, Enum):
    """rosay: rₙ = 2^{1−n}, p(n) = n. loglog: rₙ = 1/ln(n+1), p(n) = n²."""

    ROSAY = "rosay"
    LOGLOG = "loglog"


class _Origin:
    """Result of ``annulus_of`` for z = 0."""

    _instance: "_Origin | None" = None

    def __new__(cls) -> "_Origin":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ORIGIN"


ORIGIN = _Origin()


class Scheme:
    """Radii rₙ, degrees p(n), log-amplitudes ln F(n) for one construction.

    ``log_F`` for the loglog kind is a memoized recursion; the cache only
    grows and is filled under a lock, so a Scheme can be shared by worker
    threads.
    """

    def __init__(self, kind: SchemeKind | str, n_min: int = 1) -> None:
        self.kind = SchemeKind(kind)
        if n_min < 1:
            raise DomainError(f"n_min must be at least 1, got {n_min}")
        self.n_min = n_min
        self._lock = threading.Lock()
        self._log_f: List[float] = [0.0, 0.0]

    def __repr__(self) -> str:
        return f"Scheme(kind={self.kind.value!r}, n_min={self.n_min})"

    def _require(self, n: int, extended: bool = False) -> None:
        lowest = self.n_min - 1 if extended else self.n_min
        if n < lowest:
            raise DomainError(f"index {n} is below {lowest} for the {self.kind.value} scheme")

    # sequences -----------------------------------------------------------------

    def radius(self, n: int) -> float:
        self._require(n)
        if self.kind is SchemeKind.ROSAY:
            return 2.0 ** (1 - n)
        return 1.0 / math.log(n + 1)

    def log_radius(self, n: int) -> float:
        self._require(n)
        if self.kind is SchemeKind.ROSAY:
            if n < 1000:
                return math.log(self.radius(n))
            return (1 - n) * LN2
        return -math.log(math.log(n + 1))

    def relative_gap(self, n: int) -> float:
        """Δrₙ/rₙ."""
        self._require(n)
        if self.kind is SchemeKind.ROSAY:
            return 0.5
        return math.log1p(1.0 / (n + 1)) / math.log(n + 2)

    def delta_r(self, n: int) -> float:
        """Δrₙ = rₙ − r_{n+1} > 0."""
        return self.radius(n) * self.relative_gap(n)

    def log_delta_r(self, n: int) -> float:
        return self.log_radius(n) + math.log(self.relative_gap(n))

    def degree(self, n: int) -> int:
        self._require(n, extended=True)
        if self.kind is SchemeKind.ROSAY:
            return n
        return n * n

    def log_F(self, n: int) -> float:
        self._require(n, extended=True)
        if n == 0:
            return 0.0
        if self.kind is SchemeKind.ROSAY:
            return 0.5 * n * n * LN2
        if n < len(self._log_f):
            return self._log_f[n]
        with self._lock:
            cache = self._log_f
            for m in range(len(cache), n + 1):
                cache.append(cache[m - 1] + (2 * m - 2) * math.log(math.log(m + 2)))
            return cache[n]

    def fudge(self, n: int) -> float:
        """The balancing factor g(n): √2 for rosay, ln(n+2) for loglog."""
        if self.kind is SchemeKind.ROSAY:
            return math.sqrt(2.0)
        return math.log(n + 2)

    # geometry ------------------------------------------------------------------

    def annulus(self, n: int) -> Annulus:
        """Aₙ = {r_{n+1} ≤ |z| ≤ rₙ}."""
        return Annulus(self.log_radius(n + 1), self.log_delta_r(n))

    def midpoint(self, n: int) -> float:
        """xₙ = r_{n+1} + Δrₙ/2, where the cutoff sits at ½."""
        return math.exp(self.log_midpoint(n))

    def log_midpoint(self, n: int) -> float:
        return self.annulus(n).log_radius_at(0.5)

    def prefill(self, n_max: int) -> None:
        """Populate the log_F cache through n_max + 1 before a parallel scan."""
        self.log_F(n_max + 1)


def _index_estimate(s: Scheme, log_abs_z: float) -> int:
    if s.kind is SchemeKind.ROSAY:
        guess = 1.0 - log_abs_z / LN2
    else:
        inv = math.exp(-log_abs_z)
        if inv > math.log(MAX_INDEX):
            raise DomainError(f"|z| = exp({log_abs_z:.6g}) lies beyond the addressable annuli")
        guess = math.exp(inv) - 1.0
    if guess > MAX_INDEX:
        raise DomainError(f"|z| = exp({log_abs_z:.6g}) lies beyond the addressable annuli")
    return max(s.n_min, int(guess))


def annulus_of(s: Scheme, log_abs_z: float) -> int | _Origin:
    """Index n with r_{n+1} ≤ |z| ≤ rₙ; a shared circle rₙ goes to n − 1."""
    if log_abs_z == float("-inf"):
        return ORIGIN
    if math.isnan(log_abs_z):
        raise DomainError("log|z| is NaN")
    if log_abs_z > s.log_radius(s.n_min):
        raise DomainError(f"|z| = exp({log_abs_z:.6g}) exceeds r_{s.n_min} = {s.radius(s.n_min)!r}")
    n = _index_estimate(s, log_abs_z)
    while n > s.n_min and s.log_radius(n) < log_abs_z:
        n -= 1
    while s.log_radius(n + 1) > log_abs_z:
        n += 1
    if log_abs_z == s.log_radius(n) and n > s.n_min:
        n -= 1
    return n


# smoothness criterion ---------------------------------------------------------


def smoothness_criterion(s: Scheme, n: int, k: int) -> float:
    """ln of F(n+1)·p(n+1)^k·rₙ^{p(n+1)−4k}·(rₙ/Δrₙ)^k."""
    if k < 0:
        raise DomainError(f"derivative order k must be non-negative, got {k}")
    p_next = s.degree(n + 1)
    if p_next <= 4 * k:
        raise DomainError(f"p({n + 1}) = {p_next} must exceed 4k = {4 * k}; raise n")
    return s.log_F(n + 1) + k * math.log(p_next) + (p_next - 4 * k) * s.log_radius(n) - k * math.log(s.relative_gap(n))


def criterion_ratio_test(s: Scheme, n: int, k: int) -> float:
    """Consecutive difference of the log criterion; negative means the terms shrink."""
    return smoothness_criterion(s, n + 1, k) - smoothness_criterion(s, n, k)


def hypothesis_ratio(s: Scheme, n: int) -> float:
    """(Δrₙ/rₙ) / (Δr_{n+2}/r_{n+2})."""
    return s.relative_gap(n) / s.relative_gap(n + 2)


def scaled_relative_gap(s: Scheme, n: int) -> Tuple[float, float]:
    """(Δrₙ/rₙ, (Δrₙ/rₙ)·n·ln(n+2)) for the loglog scheme; the second tends to 1."""
    if s.kind is not SchemeKind.LOGLOG:
        raise DomainError("the scaled relative gap is defined for the loglog scheme only")
    gap = s.relative_gap(n)
    return gap, gap * n * math.log(n + 2)


# name under which the bounded-gap check is exported
eq44_check = scaled_relative_gap


def log_balance_sequence(s: Scheme, n: int) -> float:
    """ln of [F(n−1)r_{n+1}^{p(n−1)−p(n)} + F(n+1)rₙ^{p(n+1)−p(n)}] / (g(n)F(n))."""
    p = s.degree(n)
    inner = s.log_F(n - 1) + (s.degree(n - 1) - p) * s.log_radius(n + 1)
    outer = s.log_F(n + 1) + (s.degree(n + 1) - p) * s.log_radius(n)
    return log_sum_exp((inner, outer)) - math.log(s.fudge(n)) - s.log_F(n)


def balance_sequence(s: Scheme, n: int) -> float:
    """The amplitude balance factor; 3 for rosay, bounded for loglog."""
    return math.exp(log_balance_sequence(s, n))


def tabulate_criterion(s: Scheme, n_values: List[int], k: int) -> Dict[int, float | None]:
    """Criterion per n; None where the exponent regime p(n+1) > 4k is not reached yet."""
    table: Dict[int, float | None] = {}
    for n in n_values:
        try:
            table[n] = smoothness_criterion(s, n, k)
        except DomainError:
            table[n] = None
    logger.debug("criterion k=%d tabulated for %d indices", k, len(table))
    return table


__all__ = [
    "SchemeKind",
    "Scheme",
    "ORIGIN",
    "annulus_of",
    "smoothness_criterion",
    "criterion_ratio_test",
    "hypothesis_ratio",
    "scaled_relative_gap",
    "eq44_check",
    "balance_sequence",
    "log_balance_sequence",
    "tabulate_criterion",
]
