"""Performance validation tests for the deciders and the threshold calculus."""

import os
import time

import pytest


def _budget(local: float) -> float:
    # CI runners are slower
    is_ci = os.environ.get("CI") == "true" or os.environ.get("GITHUB_ACTIONS") == "true"
    return local * 3 if is_ci else local


def test_certificates_are_fast():
    """Pinned Kripke verdicts should take well under a second."""
    from src.harness import kripke_certificates

    start = time.perf_counter()
    verdicts = kripke_certificates()
    elapsed = time.perf_counter() - start

    print(f"\nKripke certificates: {elapsed * 1000:.1f} ms")
    assert all(verdicts.values())
    assert elapsed < _budget(1.0), f"Certificates too slow: {elapsed:.2f}s"


@pytest.mark.slow
def test_chain_oracle_check_budget():
    """The chain oracle check at default samples should finish within ten seconds."""
    from src.harness import CheckStatus, GenConfig, run_check

    report = run_check("chain-oracle-agreement", GenConfig(seed=0))

    print(f"\nchain-oracle-agreement: {report.elapsed_ms:.0f} ms")
    assert report.status is CheckStatus.PASS
    assert report.elapsed_ms < _budget(10.0) * 1000


def test_truth_table_on_many_atoms():
    """A 16-atom tautology should be decided in well under a second."""
    from src.formula import Atom, Or, conj, neg
    from src.prove import classically_valid

    names = [f"P{i}" for i in range(16)]
    f = Or(conj(*(Atom(n) for n in names)), neg(conj(*(Atom(n) for n in names))))

    start = time.perf_counter()
    assert classically_valid(f)
    elapsed = time.perf_counter() - start

    print(f"\n16-atom truth table: {elapsed * 1000:.1f} ms")
    assert elapsed < _budget(1.0)


@pytest.mark.slow
@pytest.mark.parametrize(
    "checks, budget",
    [
        (("usual-equivalence",), 60.0),
        (("g-into-nf", "g-identity-nf"), 5.0),
        (("relativised-soundness", "relativised-characterisation", "relativised-equivalence"), 60.0),
        (("factorisation-rfd", "factorisation-fd"), 60.0),
        (("identity-on-nf", "idempotence"), 120.0),
        (("decider-cross-validation",), 120.0),
    ],
)
def test_check_group_budget(checks, budget):
    """Each group of checks at the default sample count should pass within its budget."""
    from src.harness import DEFAULT_SAMPLES, CheckStatus, SuiteConfig, run_suite

    report = run_suite(SuiteConfig(seed=0, samples=DEFAULT_SAMPLES, checks=checks))
    elapsed = sum(c.elapsed_ms for c in report.checks) / 1000

    print(f"\n{', '.join(checks)}: {elapsed:.1f} s")
    assert all(c.status is CheckStatus.PASS for c in report.checks), [c.counterexample for c in report.failures]
    assert elapsed < _budget(budget), f"{checks} too slow: {elapsed:.1f}s"


def test_repeated_subformulas_hash_once():
    """Hashing a deep formula again should not walk the tree."""
    from src.formula import Atom, Imp

    f = Atom("P")
    for _ in range(300):
        f = Imp(f, f)

    hash(f)
    start = time.perf_counter()
    for _ in range(10_000):
        hash(f)
    elapsed = time.perf_counter() - start

    assert elapsed < _budget(0.1)
