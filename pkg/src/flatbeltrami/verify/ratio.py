"""First-derivative ratio suites: ‖u_z̄‖/‖u_z‖ against the per-scheme decay rates."""

from __future__ import annotations

import logging
import math
from typing import Callable, Dict, List, Sequence, Tuple

from flatbeltrami.beltrami import beltrami_residual, frobenius_identity_error, q_matrix
from flatbeltrami.config import RADIUS_FRACTIONS
from flatbeltrami.cutoff import chi_bound_estimate
from flatbeltrami.errors import DomainError
from flatbeltrami.mapping import log_ratio, ratio_upper_bound, u_jet
from flatbeltrami.scheme import SchemeKind
from flatbeltrami.verify.base import SamplePoint, Suite, no_upward_trend, ordered_map, sample_grid
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)

NEG_INF = float("-inf")


def _exp(value: float) -> float:
    return 0.0 if value == NEG_INF else math.exp(value)


class RatioSuite(Suite):
    """Per annulus, the sup of the ratio and of its rescalings over the sample grid.

    Subclasses name the rescalings via ``normalizers``: each maps
    (log_ratio, log|z|, n) to the log of the rescaled ratio.
    """

    name = "ratio"
    kind = SchemeKind.ROSAY

    def normalizers(self) -> Dict[str, Callable[[float, float, int], float]]:
        raise NotImplementedError

    def _measure(self, point: SamplePoint) -> Tuple[float, float, float]:
        """Log ratio at the point, with the residuals of u_z̄ = Q·u_z and of the Frobenius identity."""
        jet = u_jet(self.scheme, point.z, n=point.n)
        q = q_matrix(jet)
        return log_ratio(jet), beltrami_residual(jet, q), frobenius_identity_error(jet, q)

    def _per_n_sup(self, cfg: SuiteConfig, fractions: Sequence[float] = RADIUS_FRACTIONS) -> List[Dict[str, float]]:
        norms = self.normalizers()
        out = []
        for n in self.n_values:
            points = sample_grid(self.scheme, n, cfg.angle_samples, fractions)
            measured = ordered_map(self._measure, points, cfg.workers)
            logs = [m[0] for m in measured]
            row: Dict[str, float] = {
                "n": n,
                "log_ratio": max(logs),
                "beltrami_residual": max(m[1] for m in measured),
                "frobenius_error": max(m[2] for m in measured),
            }
            for key, fn in norms.items():
                row[key] = max(_exp(fn(lr, p.z.log_mag, n)) for lr, p in zip(logs, points))
            out.append(row)
            logger.debug("%s n=%d sup log ratio %.6g", self.name, n, row["log_ratio"])
        return out

    def collect(self) -> None:
        if self.scheme.kind is not self.kind:
            raise DomainError(f"{type(self).__name__} needs the {self.kind.value} scheme")
        self.m01 = chi_bound_estimate(self.scheme.annulus(self.n_values[0]), (0, 1), 257, radial_power=0)
        rows = self._per_n_sup(self.cfg)
        for row in rows:
            n = row["n"]
            row["log_bound"] = ratio_upper_bound(self.scheme, n, self.m01)
            row["within_bound"] = row["log_ratio"] <= row["log_bound"]
        self.record.rows = rows
        # the sup sits on the mid-annulus circle; the collar radii contribute zero
        doubled = self._per_n_sup(self.cfg.with_angles(2 * self.cfg.angle_samples), fractions=(0.5,))
        self.doubled_sup = {key: max(r[key] for r in doubled) for key in self.normalizers()}

    def judge(self) -> None:
        rows = self.record.rows
        margin = self.cfg.tol("ratio_growth")
        constants = self.record.constants
        constants["m01"] = self.m01
        for key in self.normalizers():
            series = [r[key] for r in rows]
            sup = max(series)
            ok, first, last = no_upward_trend(series, margin)
            constants[key] = sup
            constants[f"{key}_first_half_sup"] = first
            constants[f"{key}_last_half_sup"] = last
            constants[f"{key}_doubled_angles"] = self.doubled_sup[key]
            self.check(f"{key}_finite", math.isfinite(sup) and sup > 0.0)
            self.check(f"{key}_no_upward_trend", ok)
            change = abs(self.doubled_sup[key] - sup) / sup if sup > 0.0 else math.inf
            self.check(f"{key}_stable_under_doubling", change < self.cfg.tol("stability"))
        self.check("within_ratio_estimate", all(r["within_bound"] for r in rows))
        identity_tol = self.cfg.tol("identity")
        constants["max_beltrami_residual"] = max(r["beltrami_residual"] for r in rows)
        constants["max_frobenius_error"] = max(r["frobenius_error"] for r in rows)
        self.check("beltrami_identity", constants["max_beltrami_residual"] < identity_tol)
        self.check("frobenius_identity", constants["max_frobenius_error"] < identity_tol)


class RosayRatioSuite(RatioSuite):
    kind = SchemeKind.ROSAY

    def normalizers(self) -> Dict[str, Callable[[float, float, int], float]]:
        ln2 = math.log(2.0)
        return {
            # ratio·(−log₂|z|)
            "C1": lambda lr, log_z, n: lr + math.log(-log_z / ln2),
            "ratio_times_n": lambda lr, log_z, n: lr + math.log(n),
        }


class LoglogRatioSuite(RatioSuite):
    kind = SchemeKind.LOGLOG

    def normalizers(self) -> Dict[str, Callable[[float, float, int], float]]:
        return {
            # ratio·|z|²·exp(1/|z|)
            "C5": lambda lr, log_z, n: lr + 2.0 * log_z + math.exp(-log_z),
            # ratio·n/(ln(n+2))²
            "C4": lambda lr, log_z, n: lr + math.log(n) - 2.0 * math.log(math.log(n + 2)),
        }


def suite_ratio_rosay(cfg: SuiteConfig) -> SuiteRecord:
    return RosayRatioSuite(cfg).run()


def suite_ratio_loglog(cfg: SuiteConfig) -> SuiteRecord:
    return LoglogRatioSuite(cfg).run()


__all__ = ["RatioSuite", "RosayRatioSuite", "LoglogRatioSuite", "suite_ratio_rosay", "suite_ratio_loglog"]
