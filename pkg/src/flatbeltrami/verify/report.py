"""Suite records and the assembled verification report."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from flatbeltrami import __version__
from flatbeltrami.verify.config import SuiteConfig


@dataclass
class SuiteRecord:
    name: str
    verdict: bool = False
    constants: Dict[str, Any] = field(default_factory=dict)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    checks: Dict[str, bool] = field(default_factory=dict)
    error: Optional[str] = None
    skipped: bool = False

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "name": self.name,
            "verdict": "pass" if self.verdict else "fail",
            "constants": json_safe(self.constants),
            "checks": dict(self.checks),
            "rows": json_safe(self.rows),
        }
        if self.error is not None:
            payload["error"] = self.error
        if self.skipped:
            payload["skipped"] = True
        return payload


@dataclass
class VerificationReport:
    config: SuiteConfig
    records: List[SuiteRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(record.verdict for record in self.records)

    def record(self, name: str) -> SuiteRecord:
        for record in self.records:
            if record.name == name:
                return record
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scheme": self.config.kind.value,
            "config": self.config.to_dict(),
            "suites": [record.to_dict() for record in self.records],
            "version": __version__,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"


def json_safe(value: Any) -> Any:
    """Replace non-finite floats by the strings "inf", "-inf", "nan" (JSON has no such numbers)."""
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {str(key): json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    return value


__all__ = ["SuiteRecord", "VerificationReport", "json_safe"]
