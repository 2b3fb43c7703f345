import pytest

from pkg.config import DPWConfig
from pkg.errors import CapExceededError, ConfigError, InvalidParameterError
from pkg.report import CheckResult, Report, Status
from pkg.verify import Verifier, cmd_verify


@pytest.fixture
def config(tmp_path):
    return DPWConfig(str(tmp_path / "config.yaml"))


@pytest.fixture
def verifier(config):
    return Verifier(config, workers=1)


def test_distances_suite(verifier):
    report = verifier.run("distances", 4, 6)
    assert report.status is Status.PASS
    assert [(c.name, c.n) for c in report.checks] == [("wheel-distance", n) for n in (4, 5, 6)]
    assert report.checks[0].count == 25
    assert report.exit_code == 0


def test_envelope_keeps_timings_out_of_the_report(verifier):
    envelope = verifier.envelope(verifier.run("distances", 4, 4))
    assert set(envelope.timings) == {"wheel-distance/n=4"}
    assert "timings" not in envelope.report.model_dump()


def test_characterization_suite(verifier):
    report = verifier.run("characterization", 4, 6)
    assert report.status is Status.PASS, [c for c in report.checks if not c.passed]
    names = {c.name for c in report.checks}
    assert {"char-minus", "small-n-collapse", "psi-bijection", "psi-homomorphism", "dp-path"} <= names


@pytest.mark.parametrize("suite", ["split", "generation", "factorization"])
def test_small_suites_pass(verifier, suite):
    report = verifier.run(suite, 4, 5)
    assert report.status is Status.PASS, [c for c in report.checks if not c.passed]


def test_e0_identity_runs_for_n4_only(verifier):
    report = verifier.run("factorization", 4, 5)
    assert [c.n for c in report.checks if c.name == "e0-identity"] == [4]


def test_rank_suite(verifier):
    report = verifier.run("rank", 4, 5)
    assert report.status is Status.PASS, [c for c in report.checks if not c.passed]
    names = [c.name for c in report.checks]
    assert "rank-exact-full" in names and "rank-exact-minus" in names
    assert "rank-full" in names and "rank-minus" in names


def test_green_suite(verifier):
    report = verifier.run("green", 5, 5)
    assert report.status is Status.PASS, [c for c in report.checks if not c.passed]
    assert "theorem-J" in {c.name for c in report.checks}


def test_bad_ranges(verifier, config):
    with pytest.raises(InvalidParameterError):
        verifier.run("distances", 3, 5)
    with pytest.raises(InvalidParameterError):
        verifier.run("distances", 6, 5)
    with pytest.raises(CapExceededError):
        verifier.run("distances", 4, config.n_cap + 1)
    with pytest.raises(ConfigError):
        verifier.run("no-such-suite")
    with pytest.raises(InvalidParameterError):
        cmd_verify("no-such-suite", config=config)


def test_caps_turn_into_inconclusive(config):
    config.config["enumeration"]["vertex_cap"] = 5
    report = Verifier(config, workers=1).run("split", 6, 6)
    assert report.status is Status.INCONCLUSIVE
    assert report.exit_code == 2


def test_all_lists_every_check_once(verifier):
    names = verifier.suite_checks("all")
    assert len(names) == len(set(names))
    assert "wheel-distance" in names and "rank-exact" in names
    assert verifier.default_range("all") == (4, 9)


def test_report_status():
    ok = CheckResult.of("a", 4, True)
    bad = CheckResult.of("b", 4, False, detail="broken")
    unsure = CheckResult.inconclusive("c", 4, "cap")
    assert Report.build("s", 4, 4, [ok, unsure]).status is Status.INCONCLUSIVE
    assert Report.build("s", 4, 4, [ok, unsure, bad]).exit_code == 1
    assert bad.witnesses == [{"detail": "broken"}]


def test_default_ranges_cover_acceptance_sizes(verifier):
    assert verifier.default_range("generation") == (4, 8)
    assert verifier.default_range("green") == (4, 7)
    assert verifier.default_range("rank") == (4, 8)
    assert verifier.check_rank_full(8) == []


@pytest.mark.slow
@pytest.mark.parametrize(
    "suite, n_min, n_max",
    [("generation", 6, 8), ("green", 6, 7), ("rank", 6, 8), ("characterization", 7, 7)],
)
def test_suites_at_full_size(verifier, suite, n_min, n_max):
    report = verifier.run(suite, n_min, n_max)
    assert report.status is Status.PASS, [c for c in report.checks if not c.passed]
    if suite == "rank":
        assert {c.n for c in report.checks if c.name == "rank-full"} == {6, 7}
        assert {c.n for c in report.checks if c.name == "rank-minus"} == {6, 7, 8}
