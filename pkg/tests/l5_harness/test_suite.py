"""
L5 Harness: Check and Suite Tests

Tests the registry of checks, single-check runs and report assembly.
"""

import pytest

QUICK = [
    "usual-equivalence",
    "g-into-nf",
    "g-identity-nf",
    "kripke-certificates",
    "relativised-non-identity",
    "non-strengthening-witnesses",
    "idempotence",
    "chain-oracle-agreement",
]


def test_registry_order():
    """Test that checks are listed in registration order."""
    from src.harness import check_names

    names = check_names()

    assert len(names) == 19
    assert names[0] == "usual-equivalence"
    assert names[-1] == "scale-consistency"
    assert len(set(names)) == len(names)


def test_pinned_verdicts_hold():
    """Test the deterministic certificates directly."""
    from src.harness import kripke_certificates, strengthening_witnesses

    assert all(kripke_certificates().values())
    assert all(strengthening_witnesses().values())


def test_tautologies_are_classical():
    """Test the fixed tautology list used by the soundness checks."""
    from src.harness import TAUTOLOGIES
    from src.prove import classically_valid

    assert all(classically_valid(t) for t in TAUTOLOGIES)


@pytest.mark.parametrize("name", QUICK)
def test_quick_checks_pass(name):
    """Test that inexpensive checks pass on a few samples."""
    from src.harness import CheckStatus, GenConfig, run_check

    report = run_check(name, GenConfig(seed=0, samples=5))

    assert report.status is CheckStatus.PASS, report.counterexample
    assert report.seed == 0
    assert report.elapsed_ms >= 0


def test_unknown_check():
    """Test that unknown names are configuration errors."""
    from src.errors import ConfigError
    from src.harness import GenConfig, SuiteConfig, run_check, run_suite

    with pytest.raises(ConfigError):
        run_check("no-such-check", GenConfig())
    with pytest.raises(ConfigError):
        run_suite(SuiteConfig(checks=("no-such-check",)))


def test_check_aliases():
    """Test that every alias names a registered check and runs under its registered name."""
    from src.harness import CHECK_ALIASES, CHECKS, GenConfig, SuiteConfig, run_check, run_suite

    assert set(CHECK_ALIASES.values()) <= set(CHECKS)
    assert not set(CHECK_ALIASES) & set(CHECKS)

    report = run_check("paper-certificates", GenConfig())
    assert report.name == "kripke-certificates"

    suite = run_suite(SuiteConfig(checks=("paper-certificates", "kripke-certificates", "prop3-instances")))
    assert [c.name for c in suite.checks] == ["kripke-certificates", "relativised-non-identity"]


def test_alias_uses_the_same_stream():
    """Test that an alias and its registered name give the same verdict and samples."""
    from src.harness import GenConfig, run_check

    cfg = GenConfig(seed=4, samples=3)
    first, second = run_check("factorisation-2", cfg), run_check("factorisation-rfd", cfg)

    assert (first.name, first.status, first.samples) == (second.name, second.status, second.samples)


def test_whole_suite_entry_point(mocker):
    """Test that the whole-suite entry point passes seed and samples through."""
    from src.harness import SuiteConfig, run_paper_suite

    run_suite = mocker.patch("src.harness.suite.run_suite")

    result = run_paper_suite(seed=3, samples=7)

    run_suite.assert_called_once_with(SuiteConfig(seed=3, samples=7))
    assert result is run_suite.return_value


def test_zero_samples_skips_randomized_checks():
    """Test that randomized checks are skipped without samples and the rest still run."""
    from src.harness import CheckStatus, SuiteConfig, run_suite

    report = run_suite(SuiteConfig(samples=0, checks=("kripke-certificates", "g-into-nf")))

    assert report.get("g-into-nf").status is CheckStatus.SKIPPED
    assert report.get("kripke-certificates").status is CheckStatus.PASS
    assert report.passed


def test_suite_keeps_registry_order():
    """Test that requested checks come back in registry order, once each."""
    from src.harness import SuiteConfig, run_suite

    report = run_suite(
        SuiteConfig(samples=2, checks=("non-strengthening-witnesses", "kripke-certificates", "kripke-certificates"))
    )

    assert [c.name for c in report.checks] == ["kripke-certificates", "non-strengthening-witnesses"]


def test_failure_is_reported(mocker):
    """Test that a check raising a library error becomes a failure with a counterexample."""
    import dataclasses

    from src.errors import UnsupportedFormulaError
    from src.harness import CHECKS, CheckStatus, GenConfig, run_check

    failing = mocker.Mock(side_effect=UnsupportedFormulaError("boom"))
    broken = dataclasses.replace(CHECKS["kripke-certificates"], fn=failing)
    mocker.patch.dict(CHECKS, {"kripke-certificates": broken})

    report = run_check("kripke-certificates", GenConfig())

    assert report.status is CheckStatus.FAIL
    assert "boom" in report.counterexample


def test_report_shapes():
    """Test dict and DataFrame views of a report."""
    from src.harness import CheckReport, CheckStatus, SuiteReport

    rows = (
        CheckReport("a", CheckStatus.PASS, 3, 1.23456, 0),
        CheckReport("b", CheckStatus.FAIL, 1, 2.0, 0, counterexample="P"),
    )
    report = SuiteReport(seed=0, checks=rows)

    assert not report.passed
    assert [c.name for c in report.failures] == ["b"]
    assert report.to_dict()["checks"][0] == {
        "name": "a", "status": "pass", "samples": 3, "counterexample": None, "ms": 1.235,
    }
    frame = report.to_frame()
    assert list(frame.columns) == ["name", "status", "samples", "ms", "counterexample"]
    assert frame["status"].tolist() == ["pass", "fail"]

    with pytest.raises(ValueError):
        SuiteReport(seed=0, checks=rows + rows[:1])
    with pytest.raises(KeyError):
        report.get("c")


def test_failing_outcome_needs_counterexample():
    """Test the outcome invariant."""
    from src.harness import CheckOutcome, CheckStatus

    with pytest.raises(ValueError):
        CheckOutcome(CheckStatus.FAIL, 1)
    assert CheckOutcome.skipped().samples == 0
