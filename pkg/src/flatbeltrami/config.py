"""Global configuration constants for flatbeltrami."""

import pathlib
from dataclasses import dataclass

# Paths
PROJECT_ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA_DIR = PROJECT_ROOT / "data"

# Fraction of the radial span where the sampling grid places its radii
RADIUS_FRACTIONS = (0.25, 0.5, 0.75)

# Slack, in units of the radial span, for |z| a rounding error outside an annulus edge
EDGE_SLACK = 1e-9


@dataclass(frozen=True)
class StepGeometry:
    """Bump layout of the step density: one core bump at 1/2, two side bumps."""

    core_halfwidth: float = 0.06
    side_centers: tuple = (0.36, 0.64)
    side_halfwidth: float = 0.11
    core_coeff: float = 2.0
    quadrature_tol: float = 1e-12
    grid_size: int = 4096


@dataclass(frozen=True)
class OracleDefaults:
    """Finite-difference oracle step control."""

    relative_step: float = 1e-3
    richardson_levels: int = 1
    step_fd_h: float = 1e-4


STEP_GEOMETRY = StepGeometry()
ORACLE = OracleDefaults()
