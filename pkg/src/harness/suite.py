"""Running checks and assembling the suite report."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from src.errors import ConfigError, NegtransError
from src.harness.checks import CHECKS, canonical_check_name
from src.harness.config import DEFAULT_SAMPLES, GenConfig, SuiteConfig
from src.harness.generator import rng_for
from src.harness.report import CheckOutcome, CheckReport, CheckStatus, SuiteReport

LOGGER = logging.getLogger(__name__)


def _resolve(names: Optional[Sequence[str]]) -> List[str]:
    if names is None:
        return list(CHECKS)
    names = [canonical_check_name(n) for n in names]
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ConfigError(f"Unknown checks {unknown} (choose from {', '.join(CHECKS)})")
    # registry order, each once
    wanted = set(names)
    return [n for n in CHECKS if n in wanted]


def run_check(name: str, cfg: GenConfig) -> CheckReport:
    """Run one registered check.

    The check draws from a generator derived from ``(cfg.seed, name)``, so
    its verdict does not depend on which other checks run.

    Args:
        name: Registered check name or one of its aliases
        cfg: Generation settings; ``cfg.samples == 0`` skips randomized checks

    Returns:
        Report entry for the check

    Raises:
        ConfigError: If ``name`` is not registered
    """
    name = canonical_check_name(name)
    if name not in CHECKS:
        raise ConfigError(f"Unknown check '{name}' (choose from {', '.join(CHECKS)})")
    check = CHECKS[name]

    LOGGER.info("Running check %s (seed %d, %d samples)", name, cfg.seed, cfg.samples)
    start = time.perf_counter()
    if check.randomized and cfg.samples == 0:
        outcome = CheckOutcome.skipped("no samples requested")
    else:
        try:
            outcome = check.fn(cfg, rng_for(cfg.seed, name))
        except NegtransError as exc:
            outcome = CheckOutcome.failed(0, f"{type(exc).__name__}: {exc}", "check raised")
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    if outcome.status is CheckStatus.FAIL:
        LOGGER.warning(
            "Check %s failed after %d samples: %s (%s)",
            name,
            outcome.samples,
            outcome.counterexample,
            outcome.detail,
        )
    else:
        LOGGER.info("Check %s: %s in %.1f ms", name, outcome.status.value, elapsed_ms)

    return CheckReport(
        name=name,
        status=outcome.status,
        samples=outcome.samples,
        elapsed_ms=elapsed_ms,
        seed=cfg.seed,
        counterexample=outcome.counterexample,
        detail=outcome.detail,
    )


def run_suite(config: Optional[SuiteConfig] = None) -> SuiteReport:
    """Run the selected checks (all by default) and aggregate their verdicts.

    With ``config.workers > 1`` checks run in a process pool; the report
    keeps registry order either way.
    """
    config = config or SuiteConfig()
    names = _resolve(config.checks)
    cfg = config.gen_config()

    if config.workers > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(run_check, names, [cfg] * len(names)))
    else:
        reports = [run_check(name, cfg) for name in names]

    report = SuiteReport(seed=config.seed, checks=tuple(reports))
    LOGGER.info(
        "Suite finished: %d checks, %d failed", len(report.checks), len(report.failures)
    )
    return report


def run_paper_suite(seed: int = 0, samples: int = DEFAULT_SAMPLES) -> SuiteReport:
    """Every registered check with default generators, serially."""
    return run_suite(SuiteConfig(seed=seed, samples=samples))
