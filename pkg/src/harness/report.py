"""Check outcomes and the aggregated suite report."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckOutcome:
    """What a check function returns."""

    status: CheckStatus
    samples: int
    counterexample: Optional[str] = None
    detail: str = ""

    def __post_init__(self):
        """Validate fields after initialization."""
        if self.samples < 0:
            raise ValueError("samples must be non-negative")
        if self.status is CheckStatus.FAIL and not self.counterexample:
            raise ValueError("A failing check must carry a counterexample")

    @classmethod
    def passed(cls, samples: int) -> "CheckOutcome":
        return cls(CheckStatus.PASS, samples)

    @classmethod
    def failed(cls, samples: int, counterexample: str, detail: str = "") -> "CheckOutcome":
        return cls(CheckStatus.FAIL, samples, counterexample, detail)

    @classmethod
    def skipped(cls, detail: str = "") -> "CheckOutcome":
        return cls(CheckStatus.SKIPPED, 0, None, detail)


@dataclass(frozen=True)
class CheckReport:
    """One row of the suite report."""

    name: str
    status: CheckStatus
    samples: int
    elapsed_ms: float
    seed: int
    counterexample: Optional[str] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "samples": self.samples,
            "counterexample": self.counterexample,
            "ms": round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class SuiteReport:
    """Verdicts of a suite run, one entry per check in registry order."""

    seed: int
    checks: Tuple[CheckReport, ...] = field(default_factory=tuple)

    def __post_init__(self):
        """Validate fields after initialization."""
        object.__setattr__(self, "checks", tuple(self.checks))
        names = [c.name for c in self.checks]
        if len(names) != len(set(names)):
            raise ValueError("Each check may appear only once in a report")

    @property
    def passed(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    @property
    def failures(self) -> List[CheckReport]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    def get(self, name: str) -> CheckReport:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {"checks": [c.to_dict() for c in self.checks], "seed": self.seed}

    def to_frame(self) -> pd.DataFrame:
        """Report as a DataFrame with columns name, status, samples, ms, counterexample."""
        rows = [
            {
                "name": c.name,
                "status": c.status.value,
                "samples": c.samples,
                "ms": round(c.elapsed_ms, 1),
                "counterexample": c.counterexample or "",
            }
            for c in self.checks
        ]
        return pd.DataFrame(rows, columns=["name", "status", "samples", "ms", "counterexample"])
