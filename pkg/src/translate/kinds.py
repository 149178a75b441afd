"""Translation kinds and their parameter invariant."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.errors import ConfigError
from src.formula import Formula


class Kind(str, Enum):
    """Every translation the toolkit implements; values are the CLI names."""

    KOLMOGOROV = "ko"
    GOEDEL_GENTZEN = "g"
    GOEDEL_ORIGINAL = "goedel"
    KURODA = "ku"
    KRIVINE = "kr"
    N1 = "n1"
    N2 = "n2"
    FD = "fd"
    RFD = "rfd"

    @property
    def parameterised(self) -> bool:
        return self in _PARAMETERISED


_PARAMETERISED = frozenset({Kind.N1, Kind.N2, Kind.FD, Kind.RFD})

USUAL_KINDS = (
    Kind.KOLMOGOROV,
    Kind.GOEDEL_GENTZEN,
    Kind.GOEDEL_ORIGINAL,
    Kind.KURODA,
    Kind.KRIVINE,
)


@dataclass(frozen=True)
class TranslationKind:
    """A translation, carrying the formula F exactly when it is parameterised."""

    kind: Kind
    param: Optional[Formula] = None

    def __post_init__(self):
        """Validate fields after initialization."""
        if self.kind.parameterised and self.param is None:
            raise ConfigError(f"Translation '{self.kind.value}' requires a parameter formula")
        if not self.kind.parameterised and self.param is not None:
            raise ConfigError(f"Translation '{self.kind.value}' takes no parameter formula")

    @classmethod
    def parse(cls, name: str, param: Optional[Formula] = None) -> "TranslationKind":
        """Build a kind from its CLI name.

        Args:
            name: One of ``ko g goedel ku kr n1 n2 fd rfd``
            param: Parameter formula for ``n1 n2 fd rfd``

        Returns:
            Validated translation kind
        """
        try:
            kind = Kind(name.lower())
        except ValueError:
            choices = ", ".join(k.value for k in Kind)
            raise ConfigError(f"Unknown translation '{name}' (choose from {choices})")
        return cls(kind, param)

    def __str__(self) -> str:
        if self.param is None:
            return self.kind.value
        return f"{self.kind.value}[{self.param}]"


KO = TranslationKind(Kind.KOLMOGOROV)
G = TranslationKind(Kind.GOEDEL_GENTZEN)
GOEDEL = TranslationKind(Kind.GOEDEL_ORIGINAL)
KU = TranslationKind(Kind.KURODA)
KR = TranslationKind(Kind.KRIVINE)


def n1(param: Formula) -> TranslationKind:
    return TranslationKind(Kind.N1, param)


def n2(param: Formula) -> TranslationKind:
    return TranslationKind(Kind.N2, param)


def fd(param: Formula) -> TranslationKind:
    return TranslationKind(Kind.FD, param)


def rfd(param: Formula) -> TranslationKind:
    return TranslationKind(Kind.RFD, param)
