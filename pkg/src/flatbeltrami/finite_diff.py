"""Central finite differences with Richardson extrapolation.

The oracles here cross-check every closed-form derivative in the package.
Each difference is evaluated at h, h/2, …, h/2^levels and combined in a
Neville tableau; for central formulas the error expansion is in even powers
of h, so one level takes the truncation error from O(h²) to O(h⁴).
"""

from __future__ import annotations

from typing import Callable, Dict, List, TypeVar

T = TypeVar("T")


def _extrapolate(estimates: List[T]) -> T:
    table = [list(estimates)]
    for level in range(1, len(estimates)):
        factor = 4.0 ** level
        prev = table[-1]
        table.append([prev[i] + (prev[i] - prev[i - 1]) / (factor - 1.0) for i in range(1, len(prev))])
    return table[-1][-1]


def central_first(f: Callable[[float], T], x: float, h: float, levels: int = 1) -> T:
    """f′(x) from (f(x+h) − f(x−h)) / 2h, extrapolated."""
    estimates = []
    for i in range(levels + 1):
        hh = h / (2.0 ** i)
        estimates.append((f(x + hh) - f(x - hh)) / (2.0 * hh))
    return _extrapolate(estimates)


def central_second(f: Callable[[float], T], x: float, h: float, levels: int = 1) -> T:
    """f″(x) from (f(x+h) − 2f(x) + f(x−h)) / h², extrapolated."""
    centre = f(x)
    estimates = []
    for i in range(levels + 1):
        hh = h / (2.0 ** i)
        estimates.append((f(x + hh) - 2.0 * centre + f(x - hh)) / (hh * hh))
    return _extrapolate(estimates)


def wirtinger_jet(f: Callable[[complex], T], z: complex, h: float, levels: int = 1) -> Dict[str, T]:
    """Order-2 Wirtinger derivatives of ``f`` at ``z`` from Cartesian differences.

    Uses ∂_z = ½(∂_x − i∂_y), ∂_z̄ = ½(∂_x + i∂_y) and the second-order
    combinations ∂_zz = ¼(f_xx − f_yy − 2i f_xy), ∂_z̄z̄ = ¼(f_xx − f_yy + 2i f_xy),
    ∂_zz̄ = ¼(f_xx + f_yy).
    """
    centre = f(z)
    fx_est, fy_est, fxx_est, fyy_est, fxy_est = [], [], [], [], []
    for i in range(levels + 1):
        hh = h / (2.0 ** i)
        east, west = f(z + hh), f(z - hh)
        north, south = f(z + 1j * hh), f(z - 1j * hh)
        ne, nw = f(z + hh + 1j * hh), f(z - hh + 1j * hh)
        se, sw = f(z + hh - 1j * hh), f(z - hh - 1j * hh)
        fx_est.append((east - west) / (2.0 * hh))
        fy_est.append((north - south) / (2.0 * hh))
        fxx_est.append((east - 2.0 * centre + west) / (hh * hh))
        fyy_est.append((north - 2.0 * centre + south) / (hh * hh))
        fxy_est.append((ne - nw - se + sw) / (4.0 * hh * hh))
    fx, fy = _extrapolate(fx_est), _extrapolate(fy_est)
    fxx, fyy, fxy = _extrapolate(fxx_est), _extrapolate(fyy_est), _extrapolate(fxy_est)
    return {
        "value": centre,
        "d_z": 0.5 * (fx - 1j * fy),
        "d_zbar": 0.5 * (fx + 1j * fy),
        "d_zz": 0.25 * (fxx - fyy - 2j * fxy),
        "d_zzbar": 0.25 * (fxx + fyy),
        "d_zbarzbar": 0.25 * (fxx - fyy + 2j * fxy),
    }


def wirtinger_first(f: Callable[[complex], T], z: complex, h: float, levels: int = 1) -> tuple[T, T]:
    """(∂_z f, ∂_z̄ f) at ``z`` from central differences in x and y."""
    fx = central_first(lambda t: f(complex(t, z.imag)), z.real, h, levels)
    fy = central_first(lambda t: f(complex(z.real, t)), z.imag, h, levels)
    return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)


def zbar_derivative(f: Callable[[complex], T], z: complex, h: float, levels: int = 1) -> T:
    return wirtinger_first(f, z, h, levels)[1]


__all__ = ["central_first", "central_second", "wirtinger_jet", "wirtinger_first", "zbar_derivative"]
