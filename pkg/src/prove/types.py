"""Result records of the deciders."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from src.errors import ConfigError
from src.formula import Formula
from src.kripke.models import FiniteModel


class Logic(str, Enum):
    """Propositional classical, intuitionistic and minimal logic."""

    CPC = "cpc"
    IPC = "ipc"
    MPC = "mpc"

    @classmethod
    def parse(cls, name: str) -> "Logic":
        try:
            return cls(name.lower())
        except ValueError:
            raise ConfigError(f"Unknown logic '{name}' (choose from cpc, ipc, mpc)")


class Status(str, Enum):
    PROVABLE = "provable"
    UNPROVABLE = "unprovable"


@dataclass(frozen=True)
class Decision:
    """Verdict of a decider.

    Attributes:
        logic: Logic decided in
        status: Provable or unprovable
        formula: Formula the verdict is about (for MPC, with ``bot``
            replaced by the fresh atom)
        countermodel: Finite model whose root does not force ``formula``;
            present exactly for unprovable IPC/MPC verdicts
        valuation: Falsifying assignment for unprovable CPC verdicts
    """

    logic: Logic
    status: Status
    formula: Formula
    countermodel: Optional[FiniteModel] = None
    valuation: Optional[Dict[str, bool]] = None

    def __post_init__(self):
        """Validate fields after initialization."""
        has_model = self.countermodel is not None
        wants_model = self.status is Status.UNPROVABLE and self.logic is not Logic.CPC
        if has_model != wants_model:
            raise ValueError(
                f"A {self.logic.value} verdict '{self.status.value}' "
                f"{'needs' if wants_model else 'cannot carry'} a countermodel"
            )

    @property
    def provable(self) -> bool:
        return self.status is Status.PROVABLE


class ScaleClass(str, Enum):
    """Position on the provability-refutability scale.

    ``strongly`` means intuitionistically; the unqualified versions hold
    classically only.
    """

    STRONGLY_PROVABLE = "strongly-provable"
    PROVABLE_NOT_STRONGLY = "provable-not-strongly"
    UNDECIDABLE = "undecidable"
    REFUTABLE_NOT_STRONGLY = "refutable-not-strongly"
    STRONGLY_REFUTABLE = "strongly-refutable"
