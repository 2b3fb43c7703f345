import pytest
import yaml

from pkg.config import DEFAULTS, FALLBACK_SUITES, SUITES_PATH, DPWConfig, SuiteDefinitions, parse_value
from pkg.errors import ConfigError


def test_defaults_without_a_file(tmp_path):
    config = DPWConfig(str(tmp_path / "missing.yaml"))
    assert config.vertex_cap == 10
    assert config.search_budget == 20_000
    assert config.seed == 20240601
    assert config.n_cap == 9
    assert config.verify_setting("char_exhaustive_max_n") == 7
    assert not (tmp_path / "missing.yaml").exists()


def test_file_overrides_merge_with_defaults(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.dump({"rank": {"search_budget": 5}, "verify": {"seed": 1}}))
    config = DPWConfig(str(path))
    assert config.search_budget == 5
    assert config.seed == 1
    assert config.n_cap == DEFAULTS["verify"]["n_cap"]


def test_broken_files(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("- just\n- a list\n")
    with pytest.raises(ConfigError):
        DPWConfig(str(path))
    path.write_text("rank: {search_budget: [unterminated\n")
    with pytest.raises(ConfigError):
        DPWConfig(str(path))
    path.write_text(yaml.dump({"rank": {"search_budget": "many"}}))
    with pytest.raises(ConfigError):
        DPWConfig(str(path)).search_budget


def test_element_cap_environment_override(tmp_path, monkeypatch):
    config = DPWConfig(str(tmp_path / "config.yaml"))
    monkeypatch.setenv("DPW_ELEMENT_CAP", "1000")
    assert config.element_cap == 1000
    assert config.flat()["closure.element_cap"] == 1000
    monkeypatch.setenv("DPW_ELEMENT_CAP", "x")
    with pytest.raises(ConfigError):
        config.element_cap


def test_workers_zero_means_all_cores(tmp_path):
    config = DPWConfig(str(tmp_path / "config.yaml"))
    assert config.workers >= 1


def test_set_persists(tmp_path):
    path = tmp_path / "nested" / "config.yaml"
    config = DPWConfig(str(path))
    config.set("verify.n_cap", parse_value("8"))
    assert DPWConfig(str(path)).n_cap == 8
    with pytest.raises(ConfigError):
        config.set("verify.no_such_key", 1)


def test_suite_definitions():
    suites = SuiteDefinitions()
    assert SUITES_PATH.exists()
    assert suites.names() == list(FALLBACK_SUITES)
    for name in suites.names():
        assert suites.checks(name) == FALLBACK_SUITES[name]["checks"]
    with pytest.raises(ConfigError):
        suites.get_suite("nope")


def test_suite_fallback(tmp_path):
    suites = SuiteDefinitions(tmp_path / "absent.yaml")
    assert suites.checks("rank") == ["rank-minus", "rank-full", "rank-exact"]
    bad = tmp_path / "bad.yaml"
    bad.write_text("suites: []\n")
    with pytest.raises(ConfigError):
        SuiteDefinitions(bad)
