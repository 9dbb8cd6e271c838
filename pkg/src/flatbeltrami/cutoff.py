"""Annular cutoff χ(z) = s((|z| − r)/Δr) and its Wirtinger jet through order 2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from flatbeltrami.config import EDGE_SLACK
from flatbeltrami.errors import DomainError
from flatbeltrami.finite_diff import wirtinger_first
from flatbeltrami.logscalar import ZERO, LogComplex, lc_conj
from flatbeltrami.step import SmoothStep, default_step

ORDER_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))

LN2 = math.log(2.0)


@dataclass(frozen=True)
class Annulus:
    """{r ≤ |z| ≤ r + Δr} held as (ln r, ln Δr); radii far below binary64 stay addressable."""

    log_r_inner: float
    log_delta_r: float

    def __post_init__(self) -> None:
        for value in (self.log_r_inner, self.log_delta_r):
            if not math.isfinite(value):
                raise DomainError(f"annulus needs finite log radii, got ({self.log_r_inner!r}, {self.log_delta_r!r})")

    @classmethod
    def from_radii(cls, r_inner: float, r_outer: float) -> "Annulus":
        if not (0.0 < r_inner < r_outer):
            raise DomainError(f"annulus needs 0 < r_inner < r_outer, got ({r_inner!r}, {r_outer!r})")
        return cls(math.log(r_inner), math.log(r_outer - r_inner))

    @property
    def r_inner(self) -> float:
        return math.exp(self.log_r_inner)

    @property
    def delta_r(self) -> float:
        return math.exp(self.log_delta_r)

    @property
    def r_outer(self) -> float:
        return math.exp(self.log_r_outer)

    @property
    def log_r_outer(self) -> float:
        return self.log_radius_at(1.0)

    def log_radius_at(self, fraction: float) -> float:
        """ln of the radius a given fraction of the way from the inner to the outer edge."""
        return self.log_r_inner + math.log1p(fraction * math.exp(self.log_delta_r - self.log_r_inner))

    def radius_at(self, fraction: float) -> float:
        return math.exp(self.log_radius_at(fraction))


@dataclass(frozen=True)
class ChiJet:
    value: float
    d_z: LogComplex
    d_zbar: LogComplex
    d_zz: LogComplex
    d_zzbar: LogComplex
    d_zbarzbar: LogComplex

    def entry(self, i: int, j: int) -> LogComplex:
        """∂_z^i ∂_z̄^j χ for i + j ≤ 2."""
        if (i, j) == (0, 0):
            return LogComplex.from_real(self.value)
        return {
            (1, 0): self.d_z,
            (0, 1): self.d_zbar,
            (2, 0): self.d_zz,
            (1, 1): self.d_zzbar,
            (0, 2): self.d_zbarzbar,
        }[(i, j)]


def radial_coordinate(a: Annulus, log_abs_z: float) -> float:
    """(|z| − r_inner)/Δr, clamped onto [0, 1] within the edge slack."""
    x = math.expm1(log_abs_z - a.log_r_inner) * math.exp(a.log_r_inner - a.log_delta_r)
    if x < -EDGE_SLACK or x > 1.0 + EDGE_SLACK:
        raise DomainError(
            f"|z| = exp({log_abs_z:.17g}) lies outside the annulus "
            f"[exp({a.log_r_inner:.17g}), exp({a.log_r_outer:.17g})]"
        )
    return min(1.0, max(0.0, x))


def _scaled(value: float, log_scale: float, phase: float) -> LogComplex:
    """value·exp(log_scale)·e^{i·phase} for a real ``value`` of moderate size."""
    if value == 0.0:
        return ZERO
    return LogComplex.from_real_times_phase(value, phase) * LogComplex(log_scale)


def chi_jet(a: Annulus, z: LogComplex, step: SmoothStep | None = None) -> ChiJet:
    """Value and Wirtinger derivatives of χ at ``z`` (given as log|z|, arg z).

    With x the radial coordinate:
    ∂_z̄χ = s′/(2Δr)·e^{iθ}, ∂_z̄∂_z̄χ = (s″ − s′Δr/|z|)/(4Δr²)·e^{2iθ},
    ∂_z∂_z̄χ = (s″ + s′Δr/|z|)/(4Δr²). Only Δr/|z| ≤ 1 is formed linearly.
    """
    s = step or default_step()
    x = radial_coordinate(a, z.log_mag)
    s0 = s.integral(x)
    s1 = s.density(x)
    s2 = s.density_prime(x)
    gap_over_radius = math.exp(a.log_delta_r - z.log_mag)
    first_scale = -LN2 - a.log_delta_r
    second_scale = -2.0 * LN2 - 2.0 * a.log_delta_r

    d_zbar = _scaled(s1, first_scale, z.phase)
    d_zbarzbar = _scaled(s2 - s1 * gap_over_radius, second_scale, 2.0 * z.phase)
    d_zzbar = _scaled(s2 + s1 * gap_over_radius, second_scale, 0.0)
    return ChiJet(
        value=s0,
        d_z=lc_conj(d_zbar),
        d_zbar=d_zbar,
        d_zz=lc_conj(d_zbarzbar),
        d_zzbar=d_zzbar,
        d_zbarzbar=d_zbarzbar,
    )


def _log_radial_samples(a: Annulus, samples: int) -> np.ndarray:
    # every derivative of χ vanishes outside the band ¼ … ¾ of the radial span
    return np.array([a.log_radius_at(float(f)) for f in np.linspace(0.25, 0.75, samples)])


def chi_bound_estimate(
    a: Annulus,
    order_pair: Tuple[int, int],
    samples: int,
    radial_power: int | None = None,
    angles: int = 4,
    step: SmoothStep | None = None,
) -> float:
    """sup |∂_z^i ∂_z̄^j χ|·|z|^{2k}(Δr)^k over a radial–angular grid, k = i + j.

    ``radial_power`` replaces the exponent 2k of |z| when given.
    """
    i, j = order_pair
    if (i, j) not in ORDER_PAIRS:
        raise DomainError(f"order pair {order_pair!r} must satisfy i + j <= 2")
    if samples < 16:
        raise DomainError(f"chi_bound_estimate needs at least 16 samples, got {samples}")
    k = i + j
    power = 2 * k if radial_power is None else radial_power
    best = float("-inf")
    for log_r in _log_radial_samples(a, samples):
        log_r = float(log_r)
        for m in range(angles):
            jet = chi_jet(a, LogComplex(log_r, 2.0 * math.pi * m / angles), step)
            entry = jet.entry(i, j)
            if entry.is_zero:
                continue
            best = max(best, entry.log_mag + power * log_r + k * a.log_delta_r)
    return math.exp(best)


def chi_third_jet_fd(a: Annulus, z: complex, h: float, step: SmoothStep | None = None) -> Dict[str, complex]:
    """Third-order Wirtinger derivatives of χ by differencing the analytic order-2 jet."""

    def entry(name: str):
        return lambda w: getattr(chi_jet(a, LogComplex.from_complex(w), step), name).to_complex()

    d_zzz, d_zzzbar = wirtinger_first(entry("d_zz"), z, h)
    _, d_zzbarzbar = wirtinger_first(entry("d_zzbar"), z, h)
    _, d_zbar3 = wirtinger_first(entry("d_zbarzbar"), z, h)
    return {"d_zzz": d_zzz, "d_zzzbar": d_zzzbar, "d_zzbarzbar": d_zzbarzbar, "d_zbarzbarzbar": d_zbar3}


def chi_third_bound_estimate(a: Annulus, samples: int, step: SmoothStep | None = None) -> float:
    """sup over the radial band of max |∂³χ|·|z|⁶(Δr)³, the k = 3 shape of the derivative bound.

    The differences run in linear binary64, so the annulus must have ordinary-sized radii.
    """
    if samples < 16:
        raise DomainError(f"chi_third_bound_estimate needs at least 16 samples, got {samples}")
    h = 1e-3 * a.delta_r
    best = 0.0
    for log_r in _log_radial_samples(a, samples):
        r = math.exp(float(log_r))
        jet = chi_third_jet_fd(a, complex(r, 0.0), h, step)
        peak = max(abs(v) for v in jet.values())
        best = max(best, peak * r ** 6 * a.delta_r ** 3)
    return best


__all__ = [
    "Annulus",
    "ChiJet",
    "ORDER_PAIRS",
    "chi_jet",
    "radial_coordinate",
    "chi_bound_estimate",
    "chi_third_jet_fd",
    "chi_third_bound_estimate",
]
