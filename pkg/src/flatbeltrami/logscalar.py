"""Extended-range complex arithmetic in log-polar form.

Every complex quantity in the construction (points z, the map components,
their Wirtinger derivatives, the Beltrami coefficients) is stored as a
natural-log magnitude plus a phase. Amplitudes such as F(n)·z^{p(n)} reach
exp(±10⁶) well inside the scanned ranges, far outside binary64, while their
ratios stay moderate; keeping the magnitude in log space lets products and
quotients stay exact and sums factor out the dominant term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from flatbeltrami.errors import DomainError

TWO_PI = 2.0 * math.pi
NEG_INF = float("-inf")

# Phases where cos/sin are returned exactly so that real-valued sums cancel to zero
_EXACT_CIS = {
    0.0: (1.0, 0.0),
    -math.pi: (-1.0, 0.0),
    0.5 * math.pi: (0.0, 1.0),
    -0.5 * math.pi: (0.0, -1.0),
}


def wrap_phase(phase: float) -> float:
    """Map an angle into [-π, π)."""
    if -math.pi <= phase < math.pi:
        return phase
    wrapped = math.fmod(phase + math.pi, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    wrapped -= math.pi
    if wrapped >= math.pi:
        wrapped -= TWO_PI
    return wrapped


def _cis(phase: float) -> tuple[float, float]:
    exact = _EXACT_CIS.get(phase)
    if exact is not None:
        return exact
    return math.cos(phase), math.sin(phase)


@dataclass(frozen=True, slots=True)
class LogComplex:
    """A complex number r·e^{iθ} stored as (ln r, θ).

    Zero is canonical: ``log_mag == -inf`` and ``phase == 0``.
    """

    log_mag: float
    phase: float = 0.0

    def __post_init__(self) -> None:
        if math.isnan(self.log_mag) or self.log_mag == math.inf:
            raise DomainError(f"invalid log magnitude {self.log_mag!r}")
        if self.log_mag == NEG_INF:
            object.__setattr__(self, "phase", 0.0)
            return
        if math.isnan(self.phase) or math.isinf(self.phase):
            raise DomainError(f"invalid phase {self.phase!r}")
        object.__setattr__(self, "phase", wrap_phase(self.phase))

    # construction -----------------------------------------------------------------

    @classmethod
    def from_real(cls, value: float) -> "LogComplex":
        if value == 0.0:
            return ZERO
        return cls(math.log(abs(value)), 0.0 if value > 0.0 else -math.pi)

    @classmethod
    def from_real_times_phase(cls, value: float, phase: float) -> "LogComplex":
        """``value·e^{i·phase}`` for a real (possibly negative) ``value``."""
        if value == 0.0:
            return ZERO
        if value < 0.0:
            phase += math.pi
        return cls(math.log(abs(value)), phase)

    @classmethod
    def from_complex(cls, value: complex) -> "LogComplex":
        if value == 0:
            return ZERO
        return cls(math.log(abs(value)), math.atan2(value.imag, value.real))

    # queries -----------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.log_mag == NEG_INF

    def magnitude(self) -> float:
        if self.log_mag > 709.0:
            raise DomainError(f"magnitude exp({self.log_mag:.6g}) exceeds binary64")
        return math.exp(self.log_mag)

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        mag = self.magnitude()
        c, s = _cis(self.phase)
        return complex(mag * c, mag * s)

    # operators ---------------------------------------------------------------------

    def conj(self) -> "LogComplex":
        return lc_conj(self)

    def __neg__(self) -> "LogComplex":
        return lc_neg(self)

    def __mul__(self, other: "LogComplex | float") -> "LogComplex":
        if isinstance(other, LogComplex):
            return lc_mul(self, other)
        return lc_scale(self, float(other))

    __rmul__ = __mul__

    def __truediv__(self, other: "LogComplex | float") -> "LogComplex":
        if isinstance(other, LogComplex):
            return lc_div(self, other)
        return lc_div(self, LogComplex.from_real(float(other)))

    def __add__(self, other: "LogComplex") -> "LogComplex":
        return lc_add((self, other))

    def __sub__(self, other: "LogComplex") -> "LogComplex":
        return lc_sub(self, other)


ZERO = LogComplex(NEG_INF, 0.0)
ONE = LogComplex(0.0, 0.0)


def lc_mul(a: LogComplex, b: LogComplex) -> LogComplex:
    if a.is_zero or b.is_zero:
        return ZERO
    return LogComplex(a.log_mag + b.log_mag, a.phase + b.phase)


def lc_div(a: LogComplex, b: LogComplex) -> LogComplex:
    if b.is_zero:
        raise DomainError("division by zero in log-polar arithmetic")
    if a.is_zero:
        return ZERO
    return LogComplex(a.log_mag - b.log_mag, a.phase - b.phase)


def lc_conj(a: LogComplex) -> LogComplex:
    if a.is_zero:
        return ZERO
    return LogComplex(a.log_mag, -a.phase)


def lc_neg(a: LogComplex) -> LogComplex:
    if a.is_zero:
        return ZERO
    return LogComplex(a.log_mag, a.phase + math.pi)


def lc_scale(a: LogComplex, factor: float) -> LogComplex:
    """Multiply by a real scalar."""
    if factor == 0.0 or a.is_zero:
        return ZERO
    return lc_mul(a, LogComplex.from_real(factor))


def lc_pow_int(a: LogComplex, k: int) -> LogComplex:
    if k == 0:
        return ONE
    if a.is_zero:
        if k < 0:
            raise DomainError("negative power of zero")
        return ZERO
    return LogComplex(k * a.log_mag, k * a.phase)


def lc_add(terms: Iterable[LogComplex], signs: Sequence[float] | None = None) -> LogComplex:
    """Sum in log-polar form, each term optionally weighted by a sign ±1.

    The largest magnitude M is factored out and the scaled terms are
    accumulated in Cartesian form in input order, so the result carries the
    relative accuracy of an ordinary floating-point sum of numbers of size
    at most one. Subtraction flips the Cartesian components instead of the
    phase, so a − a is exactly (0, 0). A Cartesian total of exactly (0, 0)
    returns canonical zero.
    """
    items: Sequence[LogComplex] = terms if isinstance(terms, (list, tuple)) else list(terms)
    if not items:
        raise DomainError("lc_add needs at least one term")
    if signs is None:
        signs = (1.0,) * len(items)
    elif len(signs) != len(items):
        raise DomainError(f"lc_add got {len(items)} terms but {len(signs)} signs")
    top = max(t.log_mag for t in items)
    if top == NEG_INF:
        return ZERO
    re = 0.0
    im = 0.0
    for term, sign in zip(items, signs):
        if term.log_mag == NEG_INF:
            continue
        scale = sign * math.exp(term.log_mag - top)
        c, s = _cis(term.phase)
        re += scale * c
        im += scale * s
    if re == 0.0 and im == 0.0:
        return ZERO
    return LogComplex(top + math.log(math.hypot(re, im)), math.atan2(im, re))


def lc_sub(a: LogComplex, b: LogComplex) -> LogComplex:
    """a − b; exactly ZERO when a and b are the same value."""
    return lc_add((a, b), signs=(1.0, -1.0))


def log_sum_exp(values: Iterable[float]) -> float:
    """log Σ exp(vᵢ); -inf for an empty or all -inf input."""
    xs = list(values)
    if not xs:
        return NEG_INF
    top = max(xs)
    if top == NEG_INF:
        return NEG_INF
    return top + math.log(math.fsum(math.exp(x - top) for x in xs))


def lc_norm_pair(a: LogComplex, b: LogComplex) -> float:
    """log(|a|² + |b|²)."""
    x = 2.0 * a.log_mag
    y = 2.0 * b.log_mag
    hi, lo = (x, y) if x >= y else (y, x)
    if hi == NEG_INF:
        return NEG_INF
    if lo == NEG_INF:
        return hi
    return hi + math.log1p(math.exp(lo - hi))


def lc_relative_difference(a: LogComplex, b: LogComplex) -> float:
    """|a − b| / max(|a|, |b|), and 0 when both are zero."""
    if a.is_zero and b.is_zero:
        return 0.0
    diff = lc_sub(a, b)
    if diff.is_zero:
        return 0.0
    return math.exp(diff.log_mag - max(a.log_mag, b.log_mag))


__all__ = [
    "LogComplex",
    "ZERO",
    "ONE",
    "wrap_phase",
    "lc_mul",
    "lc_div",
    "lc_conj",
    "lc_neg",
    "lc_scale",
    "lc_pow_int",
    "lc_add",
    "lc_sub",
    "lc_norm_pair",
    "log_sum_exp",
    "lc_relative_difference",
]
