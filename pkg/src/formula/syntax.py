"""Formula and term AST.

Negation and equivalence are not constructors: ``~A`` is ``Imp(A, BOT)`` and
``A <-> B`` is ``And(Imp(A, B), Imp(B, A))``. Equality is structural and
includes bound-variable names.
"""

from dataclasses import dataclass, fields
from typing import Tuple, Union

BOT_TOKEN = "bot"


@dataclass(frozen=True)
class Var:
    """Variable occurring as a predicate argument."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Elem:
    """Domain element substituted for a variable during Kripke evaluation."""

    value: int

    def __post_init__(self):
        """Validate fields after initialization."""
        if self.value < 0:
            raise ValueError("Domain elements must be natural numbers")

    def __str__(self) -> str:
        return str(self.value)


Term = Union[Var, Elem]


class Formula:
    """Base class of the formula AST.

    Nodes compare structurally. The hash is computed once per node and kept
    on the instance, so deciders can key memos and frozensets by formulas
    without rehashing whole subtrees.
    """

    __slots__ = ()

    def _key(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    def __hash__(self) -> int:
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((type(self).__name__,) + self._key())
            object.__setattr__(self, "_hash", cached)
        return cached

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if other.__class__ is not self.__class__:
            return NotImplemented
        if hash(self) != hash(other):
            return False
        return self._key() == other._key()  # type: ignore[attr-defined]

    def __getstate__(self) -> dict:
        # string hashes differ between interpreter processes
        return {k: v for k, v in self.__dict__.items() if k != "_hash"}

    def __str__(self) -> str:
        from src.formula.printer import print_formula

        return print_formula(self)


@dataclass(frozen=True, eq=False)
class Bot(Formula):
    """Falsum."""


@dataclass(frozen=True, eq=False)
class Atom(Formula):
    """Predicate applied to terms; nullary when ``args`` is empty."""

    pred: str
    args: Tuple[Term, ...] = ()

    def __post_init__(self):
        """Validate fields after initialization."""
        if not self.pred:
            raise ValueError("Predicate name must be nonempty")
        if self.pred == BOT_TOKEN:
            raise ValueError(f"'{BOT_TOKEN}' is reserved for falsum")
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True, eq=False)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True, eq=False)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True, eq=False)
class Imp(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True, eq=False)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True, eq=False)
class Exists(Formula):
    var: str
    body: Formula


BOT = Bot()


def neg(a: Formula) -> Formula:
    """Return ``~a``, that is ``a -> bot``."""
    return Imp(a, BOT)


def iff(a: Formula, b: Formula) -> Formula:
    """Return ``a <-> b``, that is ``(a -> b) & (b -> a)``."""
    return And(Imp(a, b), Imp(b, a))


def conj(*formulas: Formula) -> Formula:
    """Right-nested conjunction; the empty conjunction is ``~bot``."""
    if not formulas:
        return neg(BOT)
    result = formulas[-1]
    for f in reversed(formulas[:-1]):
        result = And(f, result)
    return result


def atom(pred: str, *args: Union[str, int]) -> Atom:
    """Build an atom, reading strings as variables and ints as elements."""
    terms = tuple(Elem(a) if isinstance(a, int) else Var(a) for a in args)
    return Atom(pred, terms)
