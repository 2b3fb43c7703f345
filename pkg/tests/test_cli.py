import json

import pytest
import yaml
from click.testing import CliRunner

from dpwheel import cli

E0_N4 = '{"map": [[0,0],[1,1],[2,2],[3,3]]}'
Z_N6 = '{"map": [[0,1],[1,0],[2,2],[6,6]]}'


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()
    config_path = str(tmp_path / "config.yaml")

    def invoke(*args):
        return runner.invoke(cli, ["--config", config_path, *args])

    return invoke


def json_output(result):
    start = result.output.index("{")
    data, _ = json.JSONDecoder().raw_decode(result.output[start:])
    return data


def test_version(run):
    result = run("--version")
    assert result.exit_code == 0
    assert "0.1.0" in result.output


def test_gens_json(run):
    result = run("gens", "--n", "6", "--set", "minus", "--out", "json")
    assert result.exit_code == 0
    data = json_output(result)
    assert [g["label"] for g in data["generators"]] == ["G", "H", "E", "C(1)"]
    assert data["ambient"] == 6
    assert data["generators"][3]["map"] == [[1, 1], [2, 2], [4, 5], [5, 4]]


def test_classify_outside(run):
    result = run("classify", "--n", "6", "--element", Z_N6, "--json")
    assert result.exit_code == 0
    data = json_output(result)
    assert data["classification"] == "outside"
    assert data["rank"] == 4
    assert data["split_violations"] == []


def test_classify_rejects_non_isometries(run):
    result = run("classify", "--n", "6", "--element", '{"map": [[1,1],[2,4]]}')
    assert result.exit_code == 3


def test_jtype(run):
    result = run("jtype", "--n", "7", "--element", '{"map": [[1,1],[2,2],[3,3],[5,6],[6,5]]}')
    assert result.exit_code == 0
    assert "(2,3)" in result.output


def test_factorize_e0_for_n4(run):
    result = run("factorize", "--n", "4", "--element", E0_N4, "--json")
    assert result.exit_code == 0
    data = json_output(result)
    assert data["word"] == ["G0", "G0", "G0", "Z", "Z", "G0"]
    assert data["evaluates"] is True


def test_factorize_shortest_rim(run):
    result = run("factorize", "--n", "6", "--rim", "--style", "shortest", "--element", '{"map": [[1,2]]}', "--json")
    assert result.exit_code == 0
    data = json_output(result)
    assert data["evaluates"] is True
    assert data["shortest_length"] <= data["constructive_length"]


def test_close_compare(run, tmp_path):
    out = tmp_path / "closure.json"
    result = run("close", "--n", "5", "--set", "full", "--compare", "--report", str(out))
    assert result.exit_code == 0
    summary = json.loads(out.read_text())
    assert summary["equals_enumeration"] is True
    assert summary["size"] == summary["enumerated_size"]


def test_enumerate_filter(run, tmp_path):
    out = tmp_path / "outside.json"
    result = run("enumerate", "--n", "5", "--filter", "outside", "--workers", "1", "--out", str(out))
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    assert data["count"] == len(data["elements"]) > 0
    assert all(len(x["map"]) <= 4 for x in data["elements"])


def test_green_csv(run, tmp_path):
    out = tmp_path / "classes.csv"
    result = run("green", "--n", "5", "--monoid", "minus", "--check", "theorem-J-minus", "--out", str(out))
    assert result.exit_code == 0
    assert out.read_text().splitlines()[0] == "class,size,rank,name"


def test_rank_minus(run):
    result = run("rank", "--n", "5", "--monoid", "minus")
    assert result.exit_code == 0
    assert "rank = 3" in result.output


def test_verify_writes_report(run, tmp_path):
    out = tmp_path / "report.json"
    result = run("verify", "distances", "--n-min", "4", "--n-max", "5", "--workers", "1", "--report", str(out))
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    assert data["report"]["status"] == "pass"
    assert set(data["timings"]) == {"wheel-distance/n=4", "wheel-distance/n=5"}


def test_usage_errors_exit_3(run):
    assert run("factorize", "--n", "3", "--element", E0_N4).exit_code == 3
    assert run("verify", "distances", "--n-max", "42").exit_code == 3
    assert run("verify", "nonsense").exit_code == 3
    assert run("gens", "--bogus").exit_code == 3
    assert run("classify", "--n", "6", "--element", "not json").exit_code == 3


@pytest.mark.parametrize(
    "element",
    ['{"ambient": ["a"], "map": []}', '{"map": [[1.9, 2.2]]}'],
)
def test_malformed_element_points_exit_3(run, element):
    result = run("classify", "--n", "6", "--element", element)
    assert result.exit_code == 3
    assert not isinstance(result.exception, ValueError)


def test_config_set_and_show(run, tmp_path):
    assert run("config", "set", "rank.search_budget", "77").exit_code == 0
    saved = yaml.safe_load((tmp_path / "config.yaml").read_text())
    assert saved["rank"]["search_budget"] == 77
    assert run("config", "show").exit_code == 0
    assert run("config", "set", "rank.nope", "1").exit_code == 3
