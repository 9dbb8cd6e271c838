"""Runtime loading for suite defaults defined in JSON."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Any, Dict

from flatbeltrami.config import DATA_DIR
from flatbeltrami.errors import SettingsError

_SETTINGS_PATH = DATA_DIR / "verify.json"


@lru_cache(maxsize=1)
def load_settings() -> Dict[str, Any]:
    if not _SETTINGS_PATH.exists():
        raise SettingsError(f"Missing verification defaults at {_SETTINGS_PATH}")
    with _SETTINGS_PATH.open("r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise SettingsError(f"Malformed verification defaults at {_SETTINGS_PATH}: {exc}") from exc


def get_settings_section(section: str) -> Dict[str, Any]:
    data = load_settings()
    try:
        return data[section]
    except KeyError as exc:
        raise SettingsError(f"Section '{section}' not found in verification defaults") from exc


__all__ = ["load_settings", "get_settings_section", "SettingsError"]
