#!/usr/bin/env python
"""
Check determinism of the generators, deciders and suite.

Fixed seeds must give identical formulas, identical countermodels and
identical suite verdicts across repeated runs in one process.
"""
import sys
import os

# Add project root to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.formula import parse  # noqa: E402
from src.harness import GenConfig, SuiteConfig, gen_formula, rng_for, run_suite  # noqa: E402
from src.kripke import model_to_dict  # noqa: E402
from src.prove import Logic, decide  # noqa: E402

QUICK_CHECKS = ("g-into-nf", "factorisation-rfd", "kripke-certificates", "chain-oracle-agreement")


def check_generator_determinism():
    """Same config and seed, same formulas."""
    print("Checking formula generator determinism...")

    cfg = GenConfig(atom_count=3, max_depth=5, seed=42, allow_quantifiers=True)

    def sample(count):
        rng = rng_for(cfg.seed, "tool")
        return [gen_formula(cfg, rng) for _ in range(count)]

    if sample(50) != sample(50):
        print("❌ FAIL: Generator not deterministic with same seed")
        return False
    if gen_formula(cfg) != gen_formula(cfg):
        print("❌ FAIL: Default generator not reproducible across calls")
        return False

    print("✓ Formula generator determinism verified")
    return True


def check_countermodel_determinism():
    """Same query, same countermodel."""
    print("Checking countermodel determinism...")

    formula = parse("((P -> Q) -> P) -> P")
    models = [model_to_dict(decide(Logic.IPC, formula).countermodel) for _ in range(3)]
    if any(m != models[0] for m in models):
        print("❌ FAIL: Countermodels differ between runs")
        return False

    print("✓ Countermodel determinism verified")
    return True


def check_suite_determinism():
    """Same seed, same verdicts and sample counts."""
    print("Checking suite verdict determinism...")

    config = SuiteConfig(seed=7, samples=20, checks=QUICK_CHECKS)
    runs = [run_suite(config) for _ in range(2)]
    summaries = [[(c.name, c.status, c.samples, c.counterexample) for c in r.checks] for r in runs]

    if summaries[0] != summaries[1]:
        print("❌ FAIL: Suite verdicts differ between runs")
        return False
    if not runs[0].passed:
        print(f"❌ FAIL: Quick checks failed: {[c.name for c in runs[0].failures]}")
        return False

    print("✓ Suite verdict determinism verified")
    return True


def main():
    """Run all determinism checks."""
    print("=" * 60)
    print("Running determinism checks...")
    print("=" * 60)

    checks = [
        check_generator_determinism(),
        check_countermodel_determinism(),
        check_suite_determinism(),
    ]

    if all(checks):
        print("\n✓ All determinism checks passed")
        return 0
    else:
        print("\n❌ Some determinism checks failed")
        return 1


if __name__ == "__main__":
    sys.exit(main())
