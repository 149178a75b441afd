"""Generator and suite configuration."""

from dataclasses import dataclass, field, replace
from typing import Mapping, Optional, Tuple

from src.errors import ConfigError

DEFAULT_SAMPLES = 100
DEFAULT_MAX_DEPTH = 6
DEFAULT_ATOM_COUNT = 4
SYNTACTIC_SAMPLE_FACTOR = 5
IDEMPOTENCE_MAX_DEPTH = 4
NF_SAMPLE_FACTOR = 2
CROSS_VALIDATION_SAMPLE_FACTOR = 3
CROSS_VALIDATION_ATOMS = 3
CHAIN_ORACLE_SAMPLE_FACTOR = 2
PARAMS_PER_FORMULA = 5
REJECTION_TRIES = 50

CONNECTIVES = ("and", "or", "imp", "forall", "exists")
QUANTIFIERS = ("forall", "exists")

DEFAULT_WEIGHTS: Mapping[str, float] = {
    "and": 1.0,
    "or": 1.0,
    "imp": 1.5,
    "forall": 0.5,
    "exists": 0.5,
}


@dataclass(frozen=True)
class GenConfig:
    """Random formula generation settings.

    Generation is a pure function of the config: the same config always
    yields the same formulas.
    """

    atom_count: int = DEFAULT_ATOM_COUNT
    max_depth: int = DEFAULT_MAX_DEPTH
    connective_weights: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))
    allow_quantifiers: bool = False
    seed: int = 0
    samples: int = DEFAULT_SAMPLES
    leaf_probability: float = 0.35
    atom_prefix: str = "P"

    def __post_init__(self):
        """Validate fields after initialization."""
        object.__setattr__(self, "connective_weights", dict(self.connective_weights))
        if self.atom_count < 1:
            raise ConfigError("atom_count must be at least 1")
        if self.max_depth < 0:
            raise ConfigError("max_depth must be non-negative")
        if self.samples < 0:
            raise ConfigError("samples must be non-negative")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        if not 0.0 <= self.leaf_probability <= 1.0:
            raise ConfigError("leaf_probability must be between 0 and 1")
        if not self.atom_prefix or not self.atom_prefix.isidentifier():
            raise ConfigError("atom_prefix must be an identifier")
        unknown = set(self.connective_weights) - set(CONNECTIVES)
        if unknown:
            raise ConfigError(f"Unknown connectives in weights: {sorted(unknown)}")
        if any(w < 0 for w in self.connective_weights.values()):
            raise ConfigError("connective weights must be non-negative")
        if self.max_depth > 0 and sum(w for _, w in self.active_weights()) <= 0:
            raise ConfigError("at least one usable connective needs a positive weight")

    def active_weights(self) -> Tuple[Tuple[str, float], ...]:
        """Connectives in play with their weights, in a fixed order."""
        return tuple(
            (c, float(self.connective_weights.get(c, 0.0)))
            for c in CONNECTIVES
            if self.allow_quantifiers or c not in QUANTIFIERS
        )

    @property
    def atom_names(self) -> Tuple[str, ...]:
        return tuple(f"{self.atom_prefix}{i}" for i in range(self.atom_count))

    def replace(self, **changes) -> "GenConfig":
        """Copy with some fields changed (validated again)."""
        return replace(self, **changes)


@dataclass(frozen=True)
class SuiteConfig:
    """Which checks to run and how."""

    seed: int = 0
    samples: int = DEFAULT_SAMPLES
    checks: Optional[Tuple[str, ...]] = None
    workers: int = 1

    def __post_init__(self):
        """Validate fields after initialization."""
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        if self.samples < 0:
            raise ConfigError("samples must be non-negative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        if self.checks is not None:
            object.__setattr__(self, "checks", tuple(self.checks))

    def gen_config(self) -> GenConfig:
        return GenConfig(seed=self.seed, samples=self.samples)
