"""Suite configuration built from data/verify.json plus command-line overrides."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Tuple

from flatbeltrami.errors import ConfigurationError
from flatbeltrami.scheme import SchemeKind
from flatbeltrami.settings import get_settings_section

DEFAULT_TOLERANCES: Dict[str, float] = {
    "ratio_growth": 0.10,
    "stability": 0.05,
    "flatness": 1e-30,
    "criterion_floor": 100.0,
    "hypothesis_bound": 2.0,
    "fd_first": 1e-5,
    "fd_second": 1e-3,
    "fd_dq22": 1e-3,
    "calc_end": 0.1,
    "identity": 1e-10,
    "scaled_gap_low": 0.25,
    "scaled_gap_high": 2.0,
}


@dataclass(frozen=True)
class SuiteConfig:
    kind: SchemeKind
    n_range: Tuple[int, int]
    angle_samples: int = 8
    k_max: int = 10
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    fd_enabled: bool = True
    workers: int = 1
    suite_ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    suite_k_max: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", SchemeKind(self.kind))
        object.__setattr__(self, "n_range", _as_range(self.n_range, "n_range"))
        object.__setattr__(self, "suite_ranges", {name: _as_range(r, name) for name, r in self.suite_ranges.items()})
        if self.angle_samples < 4:
            raise ConfigurationError(f"angle_samples must be at least 4, got {self.angle_samples}")
        for k in (self.k_max, *self.suite_k_max.values()):
            if k < 0:
                raise ConfigurationError(f"k_max must be non-negative, got {k}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be at least 1, got {self.workers}")
        merged = dict(DEFAULT_TOLERANCES)
        merged.update(self.tolerances)
        for name, value in merged.items():
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
                raise ConfigurationError(f"tolerance {name!r} must be a positive number, got {value!r}")
        object.__setattr__(self, "tolerances", {name: float(value) for name, value in merged.items()})

    @classmethod
    def from_settings(cls, kind: SchemeKind | str, **overrides: Any) -> "SuiteConfig":
        """Defaults for ``kind`` from data/verify.json; keyword overrides win.

        An explicit ``n_range`` or ``k_max`` applies to every suite and drops
        the per-suite defaults.
        """
        kind = SchemeKind(kind)
        section = get_settings_section(kind.value)
        tolerances = dict(section.get("tolerances", {}))
        tolerances.update(overrides.pop("tolerances", None) or {})
        values: Dict[str, Any] = {
            "kind": kind,
            "n_range": tuple(section.get("n_range", (2, 40))),
            "angle_samples": int(section.get("angle_samples", 8)),
            "k_max": int(section.get("k_max", 10)),
            "tolerances": tolerances,
            "fd_enabled": bool(section.get("fd_enabled", True)),
            "workers": int(section.get("workers", 1)),
            "suite_ranges": {name: tuple(r) for name, r in section.get("suite_ranges", {}).items()},
            "suite_k_max": {name: int(k) for name, k in section.get("suite_k_max", {}).items()},
        }
        if overrides.get("n_range") is not None:
            values["suite_ranges"] = {}
        if overrides.get("k_max") is not None:
            values["suite_k_max"] = {}
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def range_for(self, suite: str) -> Tuple[int, int]:
        return self.suite_ranges.get(suite, self.n_range)

    def k_max_for(self, suite: str) -> int:
        return self.suite_k_max.get(suite, self.k_max)

    def tol(self, name: str) -> float:
        return self.tolerances[name]

    def with_angles(self, angle_samples: int) -> "SuiteConfig":
        return replace(self, angle_samples=angle_samples)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n_range": list(self.n_range),
            "angle_samples": self.angle_samples,
            "k_max": self.k_max,
            "tolerances": dict(sorted(self.tolerances.items())),
            "fd_enabled": self.fd_enabled,
            "workers": self.workers,
            "suite_ranges": {name: list(r) for name, r in sorted(self.suite_ranges.items())},
            "suite_k_max": dict(sorted(self.suite_k_max.items())),
        }


def _as_range(value: Any, label: str) -> Tuple[int, int]:
    try:
        lo, hi = (int(v) for v in value)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"{label} must be a pair of integers, got {value!r}") from exc
    if lo < 1 or hi < lo:
        raise ConfigurationError(f"{label} must satisfy 1 <= n_min <= n_max, got ({lo}, {hi})")
    return lo, hi


__all__ = ["SuiteConfig", "DEFAULT_TOLERANCES"]
