"""Infinite-order vanishing of u and of the coefficients q_ij at the origin."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from flatbeltrami.beltrami import q_matrix
from flatbeltrami.mapping import log_norm_value, u_jet
from flatbeltrami.scheme import SchemeKind
from flatbeltrami.verify.base import SamplePoint, Suite, decreasing_from, half_split, ordered_map, sample_grid
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)

# |z| grid on which the fitted coefficient envelope is carried toward the origin
EXTRAPOLATION_EXPONENTS = np.linspace(-1.0, -4.0, 13)


@dataclass(frozen=True)
class _Sample:
    log_z: float
    log_u: float
    log_q: float


class FlatnessSuite(Suite):
    name = "flatness"

    def _measure(self, point: SamplePoint) -> _Sample:
        jet = u_jet(self.scheme, point.z, n=point.n)
        q = q_matrix(jet)
        log_q = max(entry.log_mag for entry in q.entries().values())
        return _Sample(point.z.log_mag, log_norm_value(jet), log_q)

    @property
    def ks(self) -> List[int]:
        return list(range(self.cfg.k_max_for(self.name) + 1))

    def collect(self) -> None:
        rows = []
        for n in self.n_values:
            samples = ordered_map(self._measure, sample_grid(self.scheme, n, self.cfg.angle_samples), self.cfg.workers)
            row: Dict[str, float] = {"n": n}
            for k in self.ks:
                row[f"u_k{k}"] = max(k * -s.log_z + s.log_u for s in samples)
                row[f"q_k{k}"] = max(k * -s.log_z + s.log_q for s in samples)
            row["log_envelope"] = max(s.log_q + 2.0 * s.log_z + math.exp(-s.log_z) for s in samples)
            rows.append(row)
        self.record.rows = rows

    def judge(self) -> None:
        rows = self.record.rows
        log_tol = math.log(self.cfg.tol("flatness"))
        constants = self.record.constants
        for k in self.ks:
            series = [r[f"u_k{k}"] for r in rows]
            start = decreasing_from(series)
            constants[f"u_k{k}_n0"] = rows[start]["n"] if start is not None else None
            constants[f"u_k{k}_final"] = series[-1]
            self.check(f"u_k{k}_eventually_decreasing", start is not None and start <= len(series) // 2)
            self.check(f"u_k{k}_below_tolerance", series[-1] < log_tol)
        if self.scheme.kind is SchemeKind.LOGLOG:
            self._judge_envelope(rows, log_tol)

    def _judge_envelope(self, rows: List[Dict[str, float]], log_tol: float) -> None:
        """Fit E on the first half, hold the second half to it, then extrapolate E·|z|^{−k−2}e^{−1/|z|}."""
        constants = self.record.constants
        first, last = half_split([r["log_envelope"] for r in rows])
        log_e = max(first)
        constants["log_envelope"] = log_e
        self.check("q_under_envelope", max(last) <= log_e + math.log1p(self.cfg.tol("ratio_growth")))
        log_z = EXTRAPOLATION_EXPONENTS * math.log(10.0)
        for k in self.ks:
            values = [float(log_e - (k + 2) * lz - math.exp(-lz)) for lz in log_z]
            start = decreasing_from(values)
            constants[f"q_k{k}_extrapolated"] = values[-1]
            self.check(f"q_k{k}_extrapolated_decreasing", start is not None and start <= len(values) // 2)
            self.check(f"q_k{k}_extrapolated_below_tolerance", values[-1] < log_tol)


def suite_flatness(cfg: SuiteConfig) -> SuiteRecord:
    return FlatnessSuite(cfg).run()


__all__ = ["FlatnessSuite", "suite_flatness"]
