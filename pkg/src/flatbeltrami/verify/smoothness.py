"""Smoothness criterion tabulation and the bounded-gap hypothesis."""

from __future__ import annotations

import logging
from typing import Dict, List

from flatbeltrami.scheme import SchemeKind, criterion_ratio_test, eq44_check, hypothesis_ratio, tabulate_criterion
from flatbeltrami.verify.base import Suite, decreasing_from
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)


class SmoothnessSuite(Suite):
    name = "smoothness"

    @property
    def ks(self) -> List[int]:
        return list(range(self.cfg.k_max_for(self.name) + 1))

    def collect(self) -> None:
        n_values = self.n_values
        # one index past the range for the consecutive step
        tables = {k: tabulate_criterion(self.scheme, n_values + [n_values[-1] + 1], k) for k in self.ks}
        rows = []
        for n in n_values:
            row: Dict[str, object] = {"n": n, "hypothesis_ratio": hypothesis_ratio(self.scheme, n)}
            for k, table in tables.items():
                row[f"criterion_k{k}"] = table[n]
                if table[n] is not None and table[n + 1] is not None:
                    row[f"step_k{k}"] = criterion_ratio_test(self.scheme, n, k)
                else:
                    row[f"step_k{k}"] = None
            if self.scheme.kind is SchemeKind.LOGLOG:
                row["relative_gap"], row["scaled_gap"] = eq44_check(self.scheme, n)
            rows.append(row)
        self.record.rows = rows

    def judge(self) -> None:
        rows = self.record.rows
        constants = self.record.constants
        floor = -self.cfg.tol("criterion_floor")
        for k in self.ks:
            series = [r[f"criterion_k{k}"] for r in rows]
            start = decreasing_from(series)
            constants[f"criterion_k{k}_n0"] = rows[start]["n"] if start is not None else None
            constants[f"criterion_k{k}_final"] = series[-1]
            self.check(f"criterion_k{k}_eventually_decreasing", start is not None and start < len(series) - 1)
            self.check(f"criterion_k{k}_below_floor", series[-1] is not None and series[-1] < floor)
        ratios = [r["hypothesis_ratio"] for r in rows]
        constants["hypothesis_ratio_sup"] = max(ratios)
        if self.scheme.kind is SchemeKind.ROSAY:
            self.check("hypothesis_ratio_identically_one", all(value == 1.0 for value in ratios))
        else:
            self.check("hypothesis_ratio_bounded", max(ratios) <= self.cfg.tol("hypothesis_bound"))
            scaled = [r["scaled_gap"] for r in rows]
            low, high = self.cfg.tol("scaled_gap_low"), self.cfg.tol("scaled_gap_high")
            constants["scaled_gap_min"] = min(scaled)
            constants["scaled_gap_max"] = max(scaled)
            self.check("scaled_gap_in_positive_interval", low <= min(scaled) and max(scaled) <= high)


def suite_smoothness_criterion(cfg: SuiteConfig) -> SuiteRecord:
    return SmoothnessSuite(cfg).run()


__all__ = ["SmoothnessSuite", "suite_smoothness_criterion"]
