"""Clause tables of the translations, each by structural induction."""

import logging
from typing import Callable, Dict, Optional, Set

from src.formula import (
    And,
    Atom,
    Bot,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    bound_vars,
    free_vars,
    neg,
    substitute_bot,
)
from src.translate.kinds import USUAL_KINDS, Kind, TranslationKind

LOGGER = logging.getLogger(__name__)


def _not_not(a: Formula) -> Formula:
    return neg(neg(a))


def kolmogorov(a: Formula) -> Formula:
    match a:
        case Bot():
            return a
        case Atom():
            return _not_not(a)
        case And(b, c):
            return _not_not(And(kolmogorov(b), kolmogorov(c)))
        case Or(b, c):
            return _not_not(Or(kolmogorov(b), kolmogorov(c)))
        case Imp(b, c):
            return _not_not(Imp(kolmogorov(b), kolmogorov(c)))
        case Forall(x, b):
            return _not_not(Forall(x, kolmogorov(b)))
        case Exists(x, b):
            return _not_not(Exists(x, kolmogorov(b)))
    raise TypeError(f"Not a formula: {a!r}")


def goedel_gentzen(a: Formula, goedel_implication: bool = False) -> Formula:
    """Goedel-Gentzen translation.

    Args:
        a: Formula to translate
        goedel_implication: Use Goedel's own clause ``~(GA & ~GB)`` for
            implications instead of Gentzen's ``GA -> GB``

    Returns:
        Translated formula
    """

    def g(b: Formula) -> Formula:
        match b:
            case Bot():
                return b
            case Atom():
                return _not_not(b)
            case And(c, d):
                return And(g(c), g(d))
            case Or(c, d):
                return neg(And(neg(g(c)), neg(g(d))))
            case Imp(c, d) if goedel_implication:
                return neg(And(g(c), neg(g(d))))
            case Imp(c, d):
                return Imp(g(c), g(d))
            case Forall(x, c):
                return Forall(x, g(c))
            case Exists(x, c):
                return neg(Forall(x, neg(g(c))))
        raise TypeError(f"Not a formula: {b!r}")

    return g(a)


def _kuroda_inner(a: Formula) -> Formula:
    match a:
        case Bot() | Atom():
            return a
        case And(b, c):
            return And(_kuroda_inner(b), _kuroda_inner(c))
        case Or(b, c):
            return Or(_kuroda_inner(b), _kuroda_inner(c))
        case Imp(b, c):
            return Imp(_kuroda_inner(b), _kuroda_inner(c))
        case Forall(x, b):
            return Forall(x, _not_not(_kuroda_inner(b)))
        case Exists(x, b):
            return Exists(x, _kuroda_inner(b))
    raise TypeError(f"Not a formula: {a!r}")


def kuroda(a: Formula) -> Formula:
    return _not_not(_kuroda_inner(a))


def _krivine_inner(a: Formula) -> Formula:
    # bot takes the atomic clause: Kr_inner(bot) = ~bot.
    match a:
        case Bot() | Atom():
            return neg(a)
        case And(b, c):
            return Or(_krivine_inner(b), _krivine_inner(c))
        case Or(b, c):
            return And(_krivine_inner(b), _krivine_inner(c))
        case Imp(b, c):
            return And(neg(_krivine_inner(b)), _krivine_inner(c))
        case Forall(x, b):
            return Exists(x, _krivine_inner(b))
        case Exists(x, b):
            return neg(Exists(x, neg(_krivine_inner(b))))
    raise TypeError(f"Not a formula: {a!r}")


def krivine(a: Formula) -> Formula:
    return neg(_krivine_inner(a))


def friedman_dragalin(a: Formula, param: Formula) -> Formula:
    """Replace ``bot`` by F and every other atom ``P`` by ``P | F``, simultaneously."""
    match a:
        case Bot():
            return param
        case Atom():
            return Or(a, param)
        case And(b, c):
            return And(friedman_dragalin(b, param), friedman_dragalin(c, param))
        case Or(b, c):
            return Or(friedman_dragalin(b, param), friedman_dragalin(c, param))
        case Imp(b, c):
            return Imp(friedman_dragalin(b, param), friedman_dragalin(c, param))
        case Forall(x, b):
            return Forall(x, friedman_dragalin(b, param))
        case Exists(x, b):
            return Exists(x, friedman_dragalin(b, param))
    raise TypeError(f"Not a formula: {a!r}")


_UNPARAMETERISED: Dict[Kind, Callable[[Formula], Formula]] = {
    Kind.KOLMOGOROV: kolmogorov,
    Kind.GOEDEL_GENTZEN: goedel_gentzen,
    Kind.GOEDEL_ORIGINAL: lambda a: goedel_gentzen(a, goedel_implication=True),
    Kind.KURODA: kuroda,
    Kind.KRIVINE: krivine,
}


def capture_risks(kind: TranslationKind, a: Formula) -> Set[str]:
    """Free variables of the parameter F that ``a`` binds.

    Translations never rename bound variables, so such a variable would be
    captured when F is inserted under the binder.
    """
    if kind.param is None:
        return set()
    return set(free_vars(kind.param) & bound_vars(a))


def translate(kind: TranslationKind, a: Formula) -> Formula:
    """Apply a translation clause by clause.

    Args:
        kind: Translation, with its parameter F when parameterised
        a: Formula to translate

    Returns:
        Translated formula
    """
    risks = capture_risks(kind, a)
    if risks:
        LOGGER.warning(
            "Parameter of %s has free variables %s bound in the input; they will be captured",
            kind.kind.value,
            sorted(risks),
        )

    if kind.kind in _UNPARAMETERISED:
        return _UNPARAMETERISED[kind.kind](a)

    param = kind.param
    assert param is not None
    match kind.kind:
        case Kind.N1:
            return Or(goedel_gentzen(a), param)
        case Kind.N2:
            return substitute_bot(goedel_gentzen(a), param)
        case Kind.FD:
            return friedman_dragalin(a, param)
        case Kind.RFD:
            return substitute_bot(a, param)
    raise ValueError(f"Unhandled translation kind {kind.kind!r}")


def translate_all(a: Formula, param: Optional[Formula] = None) -> Dict[Kind, Formula]:
    """Translate ``a`` with every usual kind, plus the parameterised ones if F is given."""
    results = {k: translate(TranslationKind(k), a) for k in USUAL_KINDS}
    if param is not None:
        for k in (Kind.N1, Kind.N2, Kind.FD, Kind.RFD):
            results[k] = translate(TranslationKind(k, param), a)
    return results


def unfold_n2_clauses(a: Formula, param: Formula) -> Formula:
    """N2 computed directly from its unfolded clause table.

    Used to confirm that substituting F for ``bot`` in the Goedel-Gentzen
    translation agrees with the clause-by-clause reading. The existential
    clause is ``(forall x (N2 A -> F)) -> F``, the unfolding of
    ``G(exists x A) = ~forall x ~GA``.
    """

    def rel(b: Formula) -> Formula:
        return Imp(b, param)

    match a:
        case Bot():
            return param
        case Atom():
            return rel(rel(a))
        case And(b, c):
            return And(unfold_n2_clauses(b, param), unfold_n2_clauses(c, param))
        case Or(b, c):
            return rel(And(rel(unfold_n2_clauses(b, param)), rel(unfold_n2_clauses(c, param))))
        case Imp(b, c):
            return Imp(unfold_n2_clauses(b, param), unfold_n2_clauses(c, param))
        case Forall(x, b):
            return Forall(x, unfold_n2_clauses(b, param))
        case Exists(x, b):
            return rel(Forall(x, rel(unfold_n2_clauses(b, param))))
    raise TypeError(f"Not a formula: {a!r}")


__all__ = [
    "capture_risks",
    "friedman_dragalin",
    "goedel_gentzen",
    "kolmogorov",
    "krivine",
    "kuroda",
    "translate",
    "translate_all",
    "unfold_n2_clauses",
]
