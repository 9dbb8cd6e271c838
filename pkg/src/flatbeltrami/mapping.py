"""The map u = (u¹, u²) on the annular decomposition and its order-2 Wirtinger jet.

On Aₙ one component is the monomial F(n)z^{p(n)} and the other blends the
neighbouring monomials through the cutoff χₙ: χₙA + (1 − χₙ)B with
A = F(n−1)z^{p(n−1)}, B = F(n+1)z^{p(n+1)}. Even n puts the monomial in u¹,
odd n in u². Everything is carried in log-polar form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from flatbeltrami.config import ORACLE
from flatbeltrami.cutoff import ChiJet, chi_jet
from flatbeltrami.errors import DomainError
from flatbeltrami.finite_diff import wirtinger_jet
from flatbeltrami.logscalar import (
    ZERO,
    LogComplex,
    lc_add,
    lc_div,
    lc_norm_pair,
    lc_relative_difference,
    lc_scale,
    lc_sub,
)
from flatbeltrami.scheme import ORIGIN, Scheme, annulus_of, log_balance_sequence
from flatbeltrami.step import SmoothStep

logger = logging.getLogger(__name__)

JET_ENTRIES = ("value", "d_z", "d_zbar", "d_zz", "d_zzbar", "d_zbarzbar")
FIRST_ORDER = ("d_z", "d_zbar")
SECOND_ORDER = ("d_zz", "d_zzbar", "d_zbarzbar")


@dataclass(frozen=True)
class ComponentJet:
    value: LogComplex
    d_z: LogComplex
    d_zbar: LogComplex
    d_zz: LogComplex
    d_zzbar: LogComplex
    d_zbarzbar: LogComplex

    def entries(self) -> Dict[str, LogComplex]:
        return {name: getattr(self, name) for name in JET_ENTRIES}


@dataclass(frozen=True)
class UJet:
    """Order-2 jet of both components at one point of annulus ``n``."""

    n: int
    z: LogComplex
    degree: int
    u1: ComponentJet
    u2: ComponentJet
    reduced_zz: LogComplex

    @property
    def parity(self) -> str:
        return "even" if self.n % 2 == 0 else "odd"

    @property
    def monomial_index(self) -> int:
        return 1 if self.n % 2 == 0 else 2

    @property
    def blend_index(self) -> int:
        return 2 if self.n % 2 == 0 else 1

    def component(self, index: int) -> ComponentJet:
        if index == 1:
            return self.u1
        if index == 2:
            return self.u2
        raise DomainError(f"component index must be 1 or 2, got {index}")

    @property
    def monomial(self) -> ComponentJet:
        return self.component(self.monomial_index)

    @property
    def blend(self) -> ComponentJet:
        return self.component(self.blend_index)


def monomial_jet(log_amplitude: float, degree: int, z: LogComplex) -> ComponentJet:
    """Jet of F·z^p; holomorphic, so every z̄-derivative is exactly zero."""
    value = LogComplex(log_amplitude + degree * z.log_mag, degree * z.phase)
    d_z = ZERO
    d_zz = ZERO
    if degree >= 1:
        d_z = LogComplex(log_amplitude + math.log(degree) + (degree - 1) * z.log_mag, (degree - 1) * z.phase)
    if degree >= 2:
        d_zz = LogComplex(
            log_amplitude + math.log(degree) + math.log(degree - 1) + (degree - 2) * z.log_mag,
            (degree - 2) * z.phase,
        )
    return ComponentJet(value, d_z, ZERO, d_zz, ZERO, ZERO)


def _blend_jet(chi: ChiJet, a: ComponentJet, b: ComponentJet) -> ComponentJet:
    weight_a = chi.value
    weight_b = 1.0 - chi.value
    gap = lc_sub(a.value, b.value)
    gap_z = lc_sub(a.d_z, b.d_z)
    value = lc_add((lc_scale(a.value, weight_a), lc_scale(b.value, weight_b)))
    d_z = lc_add((chi.d_z * gap, lc_scale(a.d_z, weight_a), lc_scale(b.d_z, weight_b)))
    d_zbar = chi.d_zbar * gap
    d_zz = lc_add((chi.d_zz * gap, lc_scale(chi.d_z * gap_z, 2.0), lc_scale(a.d_zz, weight_a), lc_scale(b.d_zz, weight_b)))
    d_zzbar = lc_add((chi.d_zzbar * gap, chi.d_zbar * gap_z))
    d_zbarzbar = chi.d_zbarzbar * gap
    return ComponentJet(value, d_z, d_zbar, d_zz, d_zzbar, d_zbarzbar)


def _reduced_second(chi: ChiJet, a: ComponentJet, b: ComponentJet, p_a: int, p_b: int, p: int, z: LogComplex) -> LogComplex:
    """u_zz − (p − 1)u_z/z for the blend, with the p² parts cancelled term by term."""
    gap = lc_sub(a.value, b.value)
    collar = lc_sub(lc_scale(a.value, 2 * p_a - p + 1), lc_scale(b.value, 2 * p_b - p + 1))
    return lc_add(
        (
            chi.d_zz * gap,
            lc_div(chi.d_z * collar, z),
            lc_div(lc_scale(a.d_z, chi.value * (p_a - p)), z),
            lc_div(lc_scale(b.d_z, (1.0 - chi.value) * (p_b - p)), z),
        )
    )


def u_jet(s: Scheme, z: LogComplex, n: int | None = None, step: SmoothStep | None = None) -> UJet:
    """Jet of u at ``z``; ``n`` forces the annulus (used on shared circles)."""
    if z.is_zero:
        raise DomainError("origin excluded: u is evaluated only for z != 0")
    if n is None:
        found = annulus_of(s, z.log_mag)
        if found is ORIGIN:
            raise DomainError("origin excluded: u is evaluated only for z != 0")
        n = found
    chi = chi_jet(s.annulus(n), z, step)
    p = s.degree(n)
    p_a = s.degree(n - 1)
    p_b = s.degree(n + 1)
    mono = monomial_jet(s.log_F(n), p, z)
    a = monomial_jet(s.log_F(n - 1), p_a, z)
    b = monomial_jet(s.log_F(n + 1), p_b, z)
    blend = _blend_jet(chi, a, b)
    reduced = _reduced_second(chi, a, b, p_a, p_b, p, z)
    if n % 2 == 0:
        return UJet(n, z, p, mono, blend, reduced)
    return UJet(n, z, p, blend, mono, reduced)


def log_norm_value(jet: UJet) -> float:
    """ln‖u‖."""
    return 0.5 * lc_norm_pair(jet.u1.value, jet.u2.value)


def log_ratio(jet: UJet) -> float:
    """ln‖u_z̄‖ − ln‖u_z‖; −inf where both components are locally holomorphic."""
    return 0.5 * (lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar) - lc_norm_pair(jet.u1.d_z, jet.u2.d_z))


def ratio_first_derivatives(s: Scheme, z: LogComplex) -> float:
    return log_ratio(u_jet(s, z))


def ratio_upper_bound(s: Scheme, n: int, m01: float) -> float:
    """ln of the estimate ‖u_z̄‖/‖u_z‖ ≤ m₀₁rₙg(n)/(Δrₙp(n)) times the balance factor on Aₙ.

    ``m01`` bounds |∂_z̄χ|·Δr, i.e. max s′/2.
    """
    if m01 <= 0.0:
        raise DomainError(f"m01 must be positive, got {m01!r}")
    return (
        math.log(m01)
        + s.log_radius(n)
        + math.log(s.fudge(n))
        - s.log_delta_r(n)
        - math.log(s.degree(n))
        + log_balance_sequence(s, n)
    )


def boundary_consistency(s: Scheme, n: int, angles: int, step: SmoothStep | None = None) -> float:
    """Largest relative jet discrepancy on |z| = rₙ between the Aₙ and A_{n−1} formulas."""
    if n < s.n_min + 1:
        raise DomainError(f"boundary_consistency needs n >= {s.n_min + 1}, got {n}")
    log_r = s.log_radius(n)
    worst = 0.0
    for m in range(angles):
        z = LogComplex(log_r, 2.0 * math.pi * m / angles)
        outer = u_jet(s, z, n=n - 1, step=step)
        inner = u_jet(s, z, n=n, step=step)
        for index in (1, 2):
            left = outer.component(index).entries()
            right = inner.component(index).entries()
            for name in JET_ENTRIES:
                worst = max(worst, lc_relative_difference(left[name], right[name]))
    logger.debug("boundary consistency %s n=%d: %.3e", s.kind.value, n, worst)
    return worst


# finite-difference oracle -------------------------------------------------------------


def fd_step(s: Scheme, n: int, abs_z: float) -> float:
    return ORACLE.relative_step * min(s.delta_r(n), abs_z / max(1, s.degree(n)))


def rescaled_component(s: Scheme, n: int, index: int, log_scale: float, step: SmoothStep | None = None) -> Callable[[complex], complex]:
    """w ↦ u^index(w)·exp(−log_scale) in Cartesian form, annulus forced to ``n``."""

    def evaluate(w: complex) -> complex:
        jet = u_jet(s, LogComplex.from_complex(w), n=n, step=step)
        v = jet.component(index).value
        if v.is_zero:
            return 0j
        return LogComplex(v.log_mag - log_scale, v.phase).to_complex()

    return evaluate


def _normwise_error(exact: Dict[str, complex], approx: Dict[str, complex], names: Tuple[str, ...]) -> float:
    scale = max(abs(exact[name]) for name in names)
    if scale == 0.0:
        return max(abs(approx[name]) for name in names)
    return max(abs(approx[name] - exact[name]) for name in names) / scale


def jet_fd_errors(s: Scheme, n: int, z: complex, step: SmoothStep | None = None) -> Dict[str, float]:
    """Normwise relative error of the analytic jet against rescaled central differences.

    Keys are ``u{c}_first`` and ``u{c}_second`` for components c = 1, 2.
    """
    w = LogComplex.from_complex(z)
    log_scale = s.log_F(n) + s.degree(n) * w.log_mag
    h = fd_step(s, n, abs(z))
    jet = u_jet(s, w, n=n, step=step)
    errors: Dict[str, float] = {}
    for index in (1, 2):
        exact = {
            name: (ZERO if entry.is_zero else LogComplex(entry.log_mag - log_scale, entry.phase)).to_complex()
            for name, entry in jet.component(index).entries().items()
        }
        approx = wirtinger_jet(rescaled_component(s, n, index, log_scale, step), z, h, ORACLE.richardson_levels)
        errors[f"u{index}_first"] = _normwise_error(exact, approx, FIRST_ORDER)
        errors[f"u{index}_second"] = _normwise_error(exact, approx, SECOND_ORDER)
    return errors


__all__ = [
    "ComponentJet",
    "UJet",
    "JET_ENTRIES",
    "monomial_jet",
    "u_jet",
    "log_norm_value",
    "log_ratio",
    "ratio_first_derivatives",
    "ratio_upper_bound",
    "boundary_consistency",
    "fd_step",
    "rescaled_component",
    "jet_fd_errors",
]
