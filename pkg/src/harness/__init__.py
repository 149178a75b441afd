"""
Harness layer

Seeded formula generators, small-model search, the registry of checks
reproducing the known results, and the suite that runs them.
"""

from src.harness.bounded import bounded_countermodel, rooted_posets, up_sets
from src.harness.checks import (
    CHECK_ALIASES,
    CHECKS,
    TAUTOLOGIES,
    Check,
    canonical_check_name,
    check_names,
    kripke_certificates,
    register,
    strengthening_witnesses,
)
from src.harness.config import (
    DEFAULT_ATOM_COUNT,
    DEFAULT_MAX_DEPTH,
    DEFAULT_SAMPLES,
    DEFAULT_WEIGHTS,
    IDEMPOTENCE_MAX_DEPTH,
    SYNTACTIC_SAMPLE_FACTOR,
    GenConfig,
    SuiteConfig,
)
from src.harness.generator import gen_formula, gen_nf_formula, gen_propositional_param, rng_for
from src.harness.report import CheckOutcome, CheckReport, CheckStatus, SuiteReport
from src.harness.suite import run_check, run_paper_suite, run_suite

__all__ = [
    "CHECK_ALIASES",
    "CHECKS",
    "DEFAULT_ATOM_COUNT",
    "DEFAULT_MAX_DEPTH",
    "DEFAULT_SAMPLES",
    "DEFAULT_WEIGHTS",
    "IDEMPOTENCE_MAX_DEPTH",
    "SYNTACTIC_SAMPLE_FACTOR",
    "TAUTOLOGIES",
    "Check",
    "CheckOutcome",
    "CheckReport",
    "CheckStatus",
    "GenConfig",
    "SuiteConfig",
    "SuiteReport",
    "bounded_countermodel",
    "canonical_check_name",
    "check_names",
    "gen_formula",
    "gen_nf_formula",
    "gen_propositional_param",
    "kripke_certificates",
    "register",
    "rng_for",
    "rooted_posets",
    "run_check",
    "run_paper_suite",
    "run_suite",
    "strengthening_witnesses",
    "up_sets",
]
