"""Cross-check of every closed-form derivative against central differences."""

from __future__ import annotations

import logging
import math
from typing import Dict, List

from flatbeltrami.beltrami import dq22_dzbar, dq22_fd
from flatbeltrami.cutoff import chi_jet, chi_third_bound_estimate
from flatbeltrami.errors import DomainError
from flatbeltrami.finite_diff import wirtinger_first
from flatbeltrami.logscalar import LogComplex
from flatbeltrami.mapping import jet_fd_errors, u_jet
from flatbeltrami.scheme import Scheme
from flatbeltrami.verify.base import SamplePoint, Suite, ordered_map, sample_grid
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)

# interior fractions of the radial span, inside the active band of the cutoff
ORACLE_FRACTIONS = (0.375, 0.5, 0.625)
ORACLE_ANGLES = 4


def chi_fd_errors(s: Scheme, n: int, z: complex) -> Dict[str, float]:
    """Normwise relative errors of the χ jet: first order from differences of χ, second from differences of ∂χ."""
    annulus = s.annulus(n)
    h = 1e-3 * annulus.delta_r

    def jet(w: complex):
        return chi_jet(annulus, LogComplex.from_complex(w))

    exact = jet(z)
    fd_z, fd_zbar = wirtinger_first(lambda w: complex(jet(w).value), z, h)
    fd_zz, fd_zzbar = wirtinger_first(lambda w: jet(w).d_z.to_complex(), z, h)
    _, fd_zbarzbar = wirtinger_first(lambda w: jet(w).d_zbar.to_complex(), z, h)
    first = (exact.d_z.to_complex(), exact.d_zbar.to_complex())
    second = (exact.d_zz.to_complex(), exact.d_zzbar.to_complex(), exact.d_zbarzbar.to_complex())
    first_scale = max(abs(v) for v in first)
    second_scale = max(abs(v) for v in second)
    return {
        "chi_first": max(abs(fd_z - first[0]), abs(fd_zbar - first[1])) / first_scale,
        "chi_second": max(abs(fd_zz - second[0]), abs(fd_zzbar - second[1]), abs(fd_zbarzbar - second[2])) / second_scale,
    }


class OracleSuite(Suite):
    name = "fdoracle"

    def _measure(self, point: SamplePoint) -> Dict[str, float] | None:
        z = point.z.to_complex()
        try:
            errors = chi_fd_errors(self.scheme, point.n, z)
            errors.update(jet_fd_errors(self.scheme, point.n, z))
            exact = dq22_dzbar(u_jet(self.scheme, point.z, n=point.n)).total.to_complex()
            approx = dq22_fd(self.scheme, point.n, z)
        except DomainError as exc:
            # rescaled Cartesian values out of binary64 range
            logger.debug("fd oracle skips n=%d: %s", point.n, exc)
            return None
        errors["dq22"] = abs(approx - exact) / abs(exact) if exact != 0 else abs(approx)
        return errors

    def collect(self) -> None:
        rows: List[Dict[str, object]] = []
        self.skipped_n: List[int] = []
        for n in self.n_values:
            points = sample_grid(self.scheme, n, ORACLE_ANGLES, ORACLE_FRACTIONS)
            results = ordered_map(self._measure, points, self.cfg.workers)
            if any(r is None for r in results):
                self.skipped_n.append(n)
                continue
            row: Dict[str, object] = {"n": n}
            for key in results[0]:
                row[key] = max(r[key] for r in results)
            rows.append(row)
        self.record.rows = rows
        self.third_order = chi_third_bound_estimate(self.scheme.annulus(self.n_values[0]), 32)

    def judge(self) -> None:
        rows = self.record.rows
        constants = self.record.constants
        constants["skipped_n"] = list(self.skipped_n)
        constants["chi_third_order_constant"] = self.third_order
        self.check("some_indices_in_range", bool(rows))
        if not rows:
            return
        limits = {
            "chi_first": self.cfg.tol("fd_first"),
            "u1_first": self.cfg.tol("fd_first"),
            "u2_first": self.cfg.tol("fd_first"),
            "chi_second": self.cfg.tol("fd_second"),
            "u1_second": self.cfg.tol("fd_second"),
            "u2_second": self.cfg.tol("fd_second"),
            "dq22": self.cfg.tol("fd_dq22"),
        }
        for key, limit in limits.items():
            worst = max(r[key] for r in rows)
            constants[f"max_error_{key}"] = worst
            self.check(f"{key}_within_tolerance", worst <= limit)
        self.check("chi_third_order_finite", math.isfinite(self.third_order) and self.third_order > 0.0)

    def run(self) -> SuiteRecord:
        if not self.cfg.fd_enabled:
            self.record.skipped = True
            self.record.verdict = True
            self.completed = True
            return self.record
        return super().run()


def suite_fd_oracle(cfg: SuiteConfig) -> SuiteRecord:
    return OracleSuite(cfg).run()


__all__ = ["OracleSuite", "chi_fd_errors", "suite_fd_oracle"]
