"""The sequence aₙ = n·(ln ln(n+2) − ln ln n), i.e. ln of (ln(n+2)/ln n)ⁿ, and the amplitude balance factor."""

from __future__ import annotations

import logging
import math
from typing import Dict, List

import numpy as np

from flatbeltrami.errors import DomainError
from flatbeltrami.scheme import balance_sequence
from flatbeltrami.verify.base import Suite, decreasing_from
from flatbeltrami.verify.config import SuiteConfig
from flatbeltrami.verify.report import SuiteRecord

logger = logging.getLogger(__name__)

# geometric tail far past any desk-scale n-range: 10³ … 10¹²
TAIL = [int(round(v)) for v in np.logspace(3, 12, 10)]


def lemma_term(n: int) -> float:
    """aₙ, evaluated as n·log1p(log1p(2/n)/ln n) so the tail keeps full precision."""
    if n < 2:
        raise DomainError(f"the sequence aₙ starts at n = 2, got {n}")
    return n * math.log1p(math.log1p(2.0 / n) / math.log(n))


class CalculusSuite(Suite):
    name = "calclemma"

    def collect(self) -> None:
        n_values = [n for n in self.n_values if n >= 2]
        if not n_values:
            raise DomainError(f"calclemma range {self.cfg.range_for(self.name)} holds no n >= 2")
        tail = [n for n in TAIL if n > n_values[-1]]
        rows: List[Dict[str, object]] = []
        for n in n_values + tail:
            a = lemma_term(n)
            rows.append({"n": n, "a": a, "power": math.exp(a), "tail": n > n_values[-1]})
        self.record.rows = rows
        self.balance = [balance_sequence(self.scheme, n) for n in n_values]

    def judge(self) -> None:
        rows = self.record.rows
        constants = self.record.constants
        values = [r["a"] for r in rows]
        in_range = [r for r in rows if not r["tail"]]
        a2 = lemma_term(2)
        constants["a2"] = a2
        constants["sup"] = max(values)
        constants["tail_end"] = values[-1]
        start = decreasing_from(values)
        constants["decreasing_from_n"] = rows[start]["n"] if start is not None else None
        constants["balance_sup"] = max(self.balance)
        constants["balance_inf"] = min(self.balance)
        self.check("sup_finite", math.isfinite(max(values)))
        self.check("below_a2_from_10", all(r["a"] < a2 for r in in_range if r["n"] >= 10))
        self.check("eventually_decreasing", start is not None and start < len(values) - 1)
        self.check("tail_end_small", values[-1] < self.cfg.tol("calc_end"))
        self.check("balance_bounded", all(math.isfinite(b) for b in self.balance))


def suite_calculus_lemma(cfg: SuiteConfig) -> SuiteRecord:
    return CalculusSuite(cfg).run()


__all__ = ["CalculusSuite", "lemma_term", "suite_calculus_lemma", "TAIL"]
