import json

from pytest import raises

from flatbeltrami.errors import ConfigurationError, SettingsError
from flatbeltrami.scheme import SchemeKind
from flatbeltrami.verify.config import DEFAULT_TOLERANCES, SuiteConfig


def test_defaults_from_settings(settings_cache):
    cfg = SuiteConfig.from_settings("rosay")
    assert cfg.kind is SchemeKind.ROSAY
    assert cfg.range_for("fdoracle") == (2, 40)
    assert cfg.k_max_for("smoothness") == 5
    assert cfg.k_max_for("flatness") == cfg.k_max
    assert set(cfg.tolerances) == set(DEFAULT_TOLERANCES)


def test_explicit_range_replaces_per_suite_ranges(settings_cache):
    cfg = SuiteConfig.from_settings("loglog", n_range=(4, 20), k_max=3)
    assert cfg.range_for("q22growth") == (4, 20)
    assert cfg.range_for("ratio") == (4, 20)
    assert cfg.k_max_for("smoothness") == 3


def test_none_overrides_are_ignored(settings_cache):
    base = SuiteConfig.from_settings("loglog")
    assert SuiteConfig.from_settings("loglog", n_range=None, angle_samples=None, workers=None) == base


def test_tolerance_override_merges(settings_cache):
    cfg = SuiteConfig.from_settings("rosay", tolerances={"stability": 0.2})
    assert cfg.tol("stability") == 0.2
    assert cfg.tol("fd_first") == DEFAULT_TOLERANCES["fd_first"]


def test_to_dict_is_json_ready(settings_cache):
    payload = SuiteConfig.from_settings("rosay").to_dict()
    assert json.loads(json.dumps(payload))["kind"] == "rosay"
    assert payload["suite_ranges"]["ratio"] == [2, 60]


def test_with_angles():
    cfg = SuiteConfig(SchemeKind.ROSAY, (2, 10))
    assert cfg.with_angles(16).angle_samples == 16
    assert cfg.angle_samples == 8


def test_validation():
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (5, 2))
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (0, 2))
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, "abc")
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (2, 10), angle_samples=2)
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (2, 10), workers=0)
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (2, 10), k_max=-1)
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (2, 10), tolerances={"stability": -1.0})
    with raises(ConfigurationError):
        SuiteConfig(SchemeKind.ROSAY, (2, 10), tolerances={"stability": float("nan")})


def test_missing_settings_file(settings_cache, monkeypatch, tmp_path):
    import flatbeltrami.settings as settings

    monkeypatch.setattr(settings, "_SETTINGS_PATH", tmp_path / "absent.json")
    with raises(SettingsError):
        SuiteConfig.from_settings("rosay")


def test_malformed_settings_file(settings_cache, monkeypatch, tmp_path):
    import flatbeltrami.settings as settings

    path = tmp_path / "verify.json"
    path.write_text("{not json", encoding="utf-8")
    monkeypatch.setattr(settings, "_SETTINGS_PATH", path)
    with raises(SettingsError):
        settings.load_settings()


def test_missing_section(settings_cache, monkeypatch, tmp_path):
    import flatbeltrami.settings as settings

    path = tmp_path / "verify.json"
    path.write_text(json.dumps({"rosay": {}}), encoding="utf-8")
    monkeypatch.setattr(settings, "_SETTINGS_PATH", path)
    with raises(SettingsError):
        settings.get_settings_section("loglog")
    assert SuiteConfig.from_settings("rosay").n_range == (2, 40)
