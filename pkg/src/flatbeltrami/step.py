"""A concrete smooth step s: 0 on (-∞, ¼], 1 on [¾, ∞), with s(½)=½, s′(½)=2, s″(½)=0.

The density g = s′ is a sum of three scaled copies of the bump
ψ(u) = exp(1 − 1/(1 − u²)) (|u| < 1, zero elsewhere):

    g(t) = a·ψ((t − ½)/w) + λ·[ψ((t − c₁)/w_s) + ψ((t − c₂)/w_s)]

The core bump fixes g(½) = a = 2 and g′(½) = 0; the side bumps vanish on a
neighbourhood of ½ and carry the remaining mass, λ chosen so that ∫g = 1.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from flatbeltrami.config import ORACLE, STEP_GEOMETRY, StepGeometry
from flatbeltrami.errors import ConfigurationError, DomainError
from flatbeltrami.finite_diff import central_first, central_second

logger = logging.getLogger(__name__)

STEP_LO = 0.25
STEP_HI = 0.75
CORE_CENTER = 0.5


def bump(u: float) -> float:
    if abs(u) >= 1.0:
        return 0.0
    return math.exp(1.0 - 1.0 / (1.0 - u * u))


def bump_prime(u: float) -> float:
    if abs(u) >= 1.0:
        return 0.0
    w = 1.0 - u * u
    return math.exp(1.0 - 1.0 / w) * (-2.0 * u / (w * w))


@dataclass(frozen=True)
class SmoothStep:
    core_halfwidth: float
    side_centers: tuple[float, float]
    side_halfwidth: float
    core_coeff: float
    side_coeff: float
    quadrature_tol: float
    core_center: float = CORE_CENTER
    _grid: np.ndarray = field(default=None, repr=False, compare=False)
    _cumulative: np.ndarray = field(default=None, repr=False, compare=False)

    def density(self, t: float) -> float:
        """g(t) = s′(t)."""
        if t <= STEP_LO or t >= STEP_HI:
            return 0.0
        c1, c2 = self.side_centers
        core = self.core_coeff * bump((t - self.core_center) / self.core_halfwidth)
        sides = bump((t - c1) / self.side_halfwidth) + bump((t - c2) / self.side_halfwidth)
        return core + self.side_coeff * sides

    def density_prime(self, t: float) -> float:
        """g′(t) = s″(t)."""
        if t <= STEP_LO or t >= STEP_HI:
            return 0.0
        c1, c2 = self.side_centers
        core = self.core_coeff / self.core_halfwidth * bump_prime((t - self.core_center) / self.core_halfwidth)
        sides = bump_prime((t - c1) / self.side_halfwidth) + bump_prime((t - c2) / self.side_halfwidth)
        return core + self.side_coeff / self.side_halfwidth * sides

    @property
    def total_mass(self) -> float:
        return float(self._cumulative[-1])

    def integral(self, x: float) -> float:
        """s(x) = ∫₀ˣ g from the cached cumulative grid plus one local quadrature."""
        if x <= STEP_LO:
            return 0.0
        if x >= STEP_HI:
            return 1.0
        grid = self._grid
        spacing = grid[1] - grid[0]
        idx = min(int((x - STEP_LO) / spacing), len(grid) - 2)
        if grid[idx] > x:
            idx -= 1
        start = float(grid[idx])
        base = float(self._cumulative[idx])
        if x == start:
            return base
        return base + _integrate(self.density, start, x, self.quadrature_tol * 1e-2)


def _integrate(fn, a: float, b: float, epsabs: float, limit: int = 50) -> float:
    """quad() with its convergence notes routed to the DEBUG log instead of warnings."""
    result = quad(fn, a, b, epsabs=epsabs, epsrel=1e-13, limit=limit, full_output=1)
    if len(result) > 3:
        logger.debug("quadrature on [%.17g, %.17g], error estimate %.3g: %s", a, b, result[1], result[3].splitlines()[0])
    return float(result[0])


def _validate_geometry(geometry: StepGeometry, quadrature_tol: float) -> None:
    if not (0.0 < quadrature_tol <= 1e-6):
        raise ConfigurationError(f"quadrature_tol must lie in (0, 1e-6], got {quadrature_tol!r}")
    hw = geometry.core_halfwidth
    if hw <= 0.0 or CORE_CENTER - hw < STEP_LO or CORE_CENTER + hw > STEP_HI:
        raise ConfigurationError(f"core bump of half-width {hw} leaves (1/4, 3/4)")
    c1, c2 = geometry.side_centers
    ws = geometry.side_halfwidth
    if not math.isclose(c1 + c2, 1.0, abs_tol=1e-15):
        raise ConfigurationError(f"side centers {geometry.side_centers} are not symmetric about 1/2")
    for c in (c1, c2):
        if ws <= 0.0 or c - ws < STEP_LO or c + ws > STEP_HI:
            raise ConfigurationError(f"side bump at {c} of half-width {ws} leaves (1/4, 3/4)")
        if abs(c - CORE_CENTER) <= ws:
            raise ConfigurationError(f"side bump at {c} does not vanish near 1/2")
    if geometry.core_coeff != 2.0:
        logger.warning("core coefficient %s breaks s'(1/2) = 2", geometry.core_coeff)


def build_step(quadrature_tol: float = STEP_GEOMETRY.quadrature_tol, geometry: StepGeometry = STEP_GEOMETRY) -> SmoothStep:
    _validate_geometry(geometry, quadrature_tol)
    bump_mass = _integrate(bump, -1.0, 1.0, quadrature_tol * 1e-2, limit=200)
    core_mass = geometry.core_coeff * geometry.core_halfwidth * bump_mass
    side_mass = 2.0 * geometry.side_halfwidth * bump_mass
    side_coeff = (1.0 - core_mass) / side_mass
    if side_coeff < 0.0:
        raise ConfigurationError(f"core mass {core_mass:.6g} exceeds 1; side coefficient would be {side_coeff:.6g}")

    step = SmoothStep(
        core_halfwidth=geometry.core_halfwidth,
        side_centers=tuple(geometry.side_centers),
        side_halfwidth=geometry.side_halfwidth,
        core_coeff=geometry.core_coeff,
        side_coeff=side_coeff,
        quadrature_tol=quadrature_tol,
    )
    grid = np.linspace(STEP_LO, STEP_HI, geometry.grid_size + 1)
    cells = np.array(
        [_integrate(step.density, grid[i], grid[i + 1], quadrature_tol * 1e-2) for i in range(geometry.grid_size)]
    )
    cumulative = np.concatenate(([0.0], np.cumsum(cells)))
    object.__setattr__(step, "_grid", grid)
    object.__setattr__(step, "_cumulative", cumulative)
    if abs(cumulative[-1] - 1.0) > quadrature_tol:
        raise ConfigurationError(f"density mass {cumulative[-1]!r} differs from 1 by more than {quadrature_tol}")
    logger.debug("built step: side coefficient %.12g, mass %.15g", side_coeff, cumulative[-1])
    return step


@lru_cache(maxsize=1)
def default_step() -> SmoothStep:
    """The shared step built from the default geometry (built on first use)."""
    return build_step()


def step_eval(s: SmoothStep, x: float, order: int) -> float:
    if order == 0:
        return s.integral(x)
    if order == 1:
        return s.density(x)
    if order == 2:
        return s.density_prime(x)
    raise DomainError(f"analytic step derivatives stop at order 2, got {order}")


def step_eval_fd(s: SmoothStep, x: float, order: int, h: float = ORACLE.step_fd_h) -> float:
    """s‴ or s⁗ by central differences of s″, one Richardson level (O(h⁴) truncation)."""
    if h <= 0.0:
        raise DomainError(f"finite-difference step must be positive, got {h!r}")
    if order == 3:
        return central_first(s.density_prime, x, h)
    if order == 4:
        return central_second(s.density_prime, x, h)
    raise DomainError(f"finite-difference step derivatives cover orders 3 and 4, got {order}")


__all__ = ["SmoothStep", "bump", "bump_prime", "build_step", "default_step", "step_eval", "step_eval_fd", "STEP_LO", "STEP_HI"]
