"""Unbounded growth of ∂_z̄q₂₂ at the mid-annulus points xₙ (Lipschitz failure of q₂₂)."""

from __future__ import annotations

import logging
import math
from typing import Dict, List

from flatbeltrami.beltrami import dq22_dzbar, term_diagnostics
from flatbeltrami.errors import DomainError
from flatbeltrami.logscalar import LogComplex
from flatbeltrami.mapping import u_jet
from flatbeltrami.scheme import SchemeKind
from flatbeltrami.verify.base import Suite, half_split, increasing_from, ordered_map
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)


class GrowthSuite(Suite):
    name = "q22growth"

    @property
    def even_n(self) -> List[int]:
        return [n for n in self.n_values if n % 2 == 0]

    def _measure(self, n: int) -> Dict[str, float]:
        x = self.scheme.midpoint(n)
        d = dq22_dzbar(u_jet(self.scheme, LogComplex.from_real(x), n=n))
        diag = term_diagnostics(self.scheme, n)
        log_x = math.log(x)
        ln_n2 = math.log(n + 2)
        return {
            "n": n,
            "x": x,
            "log_total": d.total.log_mag,
            "log_y": d.total.log_mag + 3.0 * log_x,
            "log_w": d.total.log_mag - 3.0 * math.log(ln_n2),
            "t1": d.term1.log_mag,
            "t2": d.term2.log_mag,
            "t3": d.term3.log_mag,
            "margin_t1": d.term3.log_mag - d.term1.log_mag,
            "margin_t2": d.term3.log_mag - d.term2.log_mag,
            "c4": diag.zbar_blend * n / ln_n2 ** 2,
            "c7": diag.z_blend / ln_n2,
            "c11": diag.zzbar_blend / (n * ln_n2 ** 3),
            "C13": diag.reduced_zz_blend / (n * ln_n2 ** 3),
            "C15": diag.zbarzbar_blend * n / ln_n2 ** 3,
        }

    def collect(self) -> None:
        if self.scheme.kind is not SchemeKind.LOGLOG:
            raise DomainError("the q22 growth suite runs on the loglog scheme")
        if len(self.even_n) < 4:
            raise DomainError(f"the q22 growth suite needs at least 4 even indices in {self.cfg.range_for(self.name)}")
        self.record.rows = ordered_map(self._measure, self.even_n, self.cfg.workers)

    def judge(self) -> None:
        rows = self.record.rows
        constants = self.record.constants
        _, last = half_split(rows)

        totals = [r["log_total"] for r in last]
        self.check("total_increasing_last_half", all(b > a for a, b in zip(totals, totals[1:])))

        c16 = math.exp(min(r["log_y"] for r in last))
        c = math.exp(min(r["log_w"] for r in last))
        constants["c16"] = c16
        constants["c"] = c
        self.check("c16_positive", math.isfinite(c16) and c16 > 0.0)
        self.check("c_positive", math.isfinite(c) and c > 0.0)

        dominant = [r["t3"] > r["t1"] and r["t3"] > r["t2"] for r in rows]
        start = len(dominant)
        while start > 0 and dominant[start - 1]:
            start -= 1
        constants["dominance_n0"] = rows[start]["n"] if start < len(rows) else None
        self.check("term3_dominates_from_n0", start <= len(rows) // 2)
        rise = increasing_from([r["log_total"] for r in rows])
        constants["total_increasing_from"] = rows[rise]["n"] if rise is not None else None

        for key, reducer in (("c4", min), ("c7", min), ("c11", min), ("C13", max), ("C15", max)):
            constants[key] = reducer(r[key] for r in last)
        constants["C7"] = max(r["c7"] for r in last)


def suite_q22_growth(cfg: SuiteConfig) -> SuiteRecord:
    return GrowthSuite(cfg).run()


__all__ = ["GrowthSuite", "suite_q22_growth"]
