"""The coefficient matrix Q with u_z̄ = Q·u_z, and the z̄-derivative of its active diagonal entry."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict

from flatbeltrami.config import ORACLE
from flatbeltrami.errors import DomainError
from flatbeltrami.finite_diff import zbar_derivative
from flatbeltrami.logscalar import (
    NEG_INF,
    ZERO,
    LogComplex,
    lc_add,
    lc_conj,
    lc_norm_pair,
    log_sum_exp,
)
from flatbeltrami.mapping import UJet, fd_step, u_jet
from flatbeltrami.scheme import Scheme, SchemeKind
from flatbeltrami.step import SmoothStep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QMatrix:
    q11: LogComplex
    q12: LogComplex
    q21: LogComplex
    q22: LogComplex
    log_frobenius_sq: float

    @classmethod
    def zero(cls) -> "QMatrix":
        """Q(0), the zero matrix."""
        return cls(ZERO, ZERO, ZERO, ZERO, NEG_INF)

    def entry(self, i: int, j: int) -> LogComplex:
        return {(1, 1): self.q11, (1, 2): self.q12, (2, 1): self.q21, (2, 2): self.q22}[(i, j)]

    def entries(self) -> Dict[str, LogComplex]:
        return {"q11": self.q11, "q12": self.q12, "q21": self.q21, "q22": self.q22}


@dataclass(frozen=True)
class Q22Derivative:
    """∂_z̄ of the active diagonal entry split as total = term1 + term2 − term3."""

    total: LogComplex
    term1: LogComplex
    term2: LogComplex
    term3: LogComplex


@dataclass(frozen=True)
class TermDominance:
    n: int
    x: float
    t1: float
    t2: float
    t3: float

    @property
    def margin_over_term1(self) -> float:
        return self.t3 - self.t1

    @property
    def margin_over_term2(self) -> float:
        return self.t3 - self.t2

    @property
    def dominant(self) -> bool:
        return self.t3 > self.t1 and self.t3 > self.t2


@dataclass(frozen=True)
class TermDiagnostics:
    """Factor ratios at xₙ, each against |u_z| of the monomial component."""

    n: int
    zbar_blend: float
    z_blend: float
    zzbar_blend: float
    reduced_zz_blend: float
    zbarzbar_blend: float


def _log_norm_sq(jet: UJet) -> LogComplex:
    return LogComplex(lc_norm_pair(jet.u1.d_z, jet.u2.d_z))


def q_matrix(jet: UJet) -> QMatrix:
    """q_ij = u^i_z̄·conj(u^j_z)/(|u¹_z|² + |u²_z|²)."""
    norm = _log_norm_sq(jet)
    zbar = (jet.u1.d_zbar, jet.u2.d_zbar)
    z_conj = (lc_conj(jet.u1.d_z), lc_conj(jet.u2.d_z))
    q = [[(zbar[i] * z_conj[j]) / norm for j in range(2)] for i in range(2)]
    frob = log_sum_exp(2.0 * entry.log_mag for row in q for entry in row)
    return QMatrix(q[0][0], q[0][1], q[1][0], q[1][1], frob)


def beltrami_residual(jet: UJet, q: QMatrix) -> float:
    """max_i |u^i_z̄ − Σ_j q_ij u^j_z| / ‖u_z̄‖; 0 when u_z̄ vanishes and the residual is exact."""
    rows = []
    for i, target in ((1, jet.u1.d_zbar), (2, jet.u2.d_zbar)):
        rows.append(lc_add((target, q.entry(i, 1) * jet.u1.d_z, q.entry(i, 2) * jet.u2.d_z), signs=(1.0, -1.0, -1.0)))
    scale = 0.5 * lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar)
    worst = max(r.log_mag for r in rows)
    if worst == NEG_INF:
        return 0.0
    if scale == NEG_INF:
        return math.inf
    return math.exp(worst - scale)


def frobenius_identity_error(jet: UJet, q: QMatrix) -> float:
    """Relative gap between Σ|q_ij|² and ‖u_z̄‖²/‖u_z‖²."""
    expected = lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar) - lc_norm_pair(jet.u1.d_z, jet.u2.d_z)
    if expected == NEG_INF and q.log_frobenius_sq == NEG_INF:
        return 0.0
    return abs(math.expm1(q.log_frobenius_sq - expected))


def dq22_dzbar(jet: UJet) -> Q22Derivative:
    """∂_z̄ of the diagonal entry of Q on the blend component (q₂₂ for even n, q₁₁ for odd n)."""
    b = jet.blend
    m = jet.monomial
    norm = _log_norm_sq(jet)
    norm_sq = LogComplex(2.0 * norm.log_mag)
    b_z_conj = lc_conj(b.d_z)
    mono_sq = LogComplex(2.0 * m.d_z.log_mag)
    term1 = (b.d_zbarzbar * b_z_conj) / norm
    term2 = (b.d_zbar * mono_sq * lc_conj(jet.reduced_zz)) / norm_sq
    term3 = (b.d_zbar * b_z_conj * b.d_zzbar * b_z_conj) / norm_sq
    total = lc_add((term1, term2, term3), signs=(1.0, 1.0, -1.0))
    return Q22Derivative(total, term1, term2, term3)


def active_q_entry(jet: UJet, q: QMatrix) -> LogComplex:
    i = jet.blend_index
    return q.entry(i, i)


def dq22_fd(s: Scheme, n: int, z: complex, step: SmoothStep | None = None) -> complex:
    """∂_z̄ of the active diagonal entry by central differences of q_matrix alone."""

    def entry(w: complex) -> complex:
        jet = u_jet(s, LogComplex.from_complex(w), n=n, step=step)
        return active_q_entry(jet, q_matrix(jet)).to_complex()

    return zbar_derivative(entry, z, fd_step(s, n, abs(z)), ORACLE.richardson_levels)


def _check_even_loglog(s: Scheme, n: int) -> None:
    if s.kind is not SchemeKind.LOGLOG:
        raise DomainError("term analysis is defined for the loglog scheme")
    if n % 2:
        raise DomainError(f"term analysis needs an even annulus index, got {n}")


def term_dominance(s: Scheme, n: int, step: SmoothStep | None = None) -> TermDominance:
    """Log magnitudes of the three terms at xₙ."""
    _check_even_loglog(s, n)
    x = s.midpoint(n)
    d = dq22_dzbar(u_jet(s, LogComplex.from_real(x), n=n, step=step))
    return TermDominance(n, x, d.term1.log_mag, d.term2.log_mag, d.term3.log_mag)


def term_diagnostics(s: Scheme, n: int, step: SmoothStep | None = None) -> TermDiagnostics:
    _check_even_loglog(s, n)
    jet = u_jet(s, LogComplex.from_real(s.midpoint(n)), n=n, step=step)
    base = jet.monomial.d_z.log_mag
    b = jet.blend

    def ratio(value: LogComplex) -> float:
        return math.exp(value.log_mag - base) if not value.is_zero else 0.0

    return TermDiagnostics(
        n=n,
        zbar_blend=ratio(b.d_zbar),
        z_blend=ratio(b.d_z),
        zzbar_blend=ratio(b.d_zzbar),
        reduced_zz_blend=ratio(jet.reduced_zz),
        zbarzbar_blend=ratio(b.d_zbarzbar),
    )


__all__ = [
    "QMatrix",
    "Q22Derivative",
    "TermDominance",
    "TermDiagnostics",
    "q_matrix",
    "beltrami_residual",
    "frobenius_identity_error",
    "dq22_dzbar",
    "active_q_entry",
    "dq22_fd",
    "term_dominance",
    "term_diagnostics",
]
