"""Structural predicates, measures and substitutions over formulas."""

from typing import AbstractSet, Dict, FrozenSet, List, Set

from src.formula.syntax import (
    And,
    Atom,
    Bot,
    Elem,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Var,
)

FRESH_PREFIX = "_f"


def is_nf(f: Formula) -> bool:
    """Check membership in the negative fragment.

    The fragment is generated by ``bot`` and ``~P`` for atomic ``P``, closed
    under ``&``, ``->`` and ``forall``.
    """
    match f:
        case Bot():
            return True
        case Imp(Atom(), Bot()):
            return True
        case And(a, b) | Imp(a, b):
            return is_nf(a) and is_nf(b)
        case Forall(_, body):
            return is_nf(body)
    return False


def substitute_bot(f: Formula, g: Formula) -> Formula:
    """Replace every ``bot`` leaf of ``f`` by ``g`` (so ``~A`` becomes ``A -> g``)."""
    match f:
        case Bot():
            return g
        case Atom():
            return f
        case And(a, b):
            return And(substitute_bot(a, g), substitute_bot(b, g))
        case Or(a, b):
            return Or(substitute_bot(a, g), substitute_bot(b, g))
        case Imp(a, b):
            return Imp(substitute_bot(a, g), substitute_bot(b, g))
        case Forall(x, body):
            return Forall(x, substitute_bot(body, g))
        case Exists(x, body):
            return Exists(x, substitute_bot(body, g))
    raise TypeError(f"Not a formula: {f!r}")


def substitute_atom(f: Formula, name: str, g: Formula) -> Formula:
    """Replace every nullary atom ``name`` of ``f`` by the closed formula ``g``."""
    match f:
        case Atom(pred, ()) if pred == name:
            return g
        case Bot() | Atom():
            return f
        case And(a, b):
            return And(substitute_atom(a, name, g), substitute_atom(b, name, g))
        case Or(a, b):
            return Or(substitute_atom(a, name, g), substitute_atom(b, name, g))
        case Imp(a, b):
            return Imp(substitute_atom(a, name, g), substitute_atom(b, name, g))
        case Forall(x, body):
            return Forall(x, substitute_atom(body, name, g))
        case Exists(x, body):
            return Exists(x, substitute_atom(body, name, g))
    raise TypeError(f"Not a formula: {f!r}")


def substitute_var(f: Formula, x: str, d: int) -> Formula:
    """Replace free occurrences of variable ``x`` by domain element ``d``."""
    match f:
        case Bot():
            return f
        case Atom(pred, args):
            if Var(x) not in args:
                return f
            return Atom(pred, tuple(Elem(d) if t == Var(x) else t for t in args))
        case And(a, b):
            return And(substitute_var(a, x, d), substitute_var(b, x, d))
        case Or(a, b):
            return Or(substitute_var(a, x, d), substitute_var(b, x, d))
        case Imp(a, b):
            return Imp(substitute_var(a, x, d), substitute_var(b, x, d))
        case Forall(y, body):
            return f if y == x else Forall(y, substitute_var(body, x, d))
        case Exists(y, body):
            return f if y == x else Exists(y, substitute_var(body, x, d))
    raise TypeError(f"Not a formula: {f!r}")


def collapse_triple_negation(f: Formula) -> Formula:
    """Rewrite every ``~~~P`` (``P`` a non-falsum atom) to ``~P``.

    Bottom-up, so one pass reaches the fixed point: after the children are
    collapsed the only possible new redex is at the root.
    """
    match f:
        case Bot() | Atom():
            return f
        case Imp(a, Bot()):
            inner = collapse_triple_negation(a)
            match inner:
                case Imp(Imp(Atom() as p, Bot()), Bot()):
                    return Imp(p, Bot())
            return Imp(inner, Bot())
        case And(a, b):
            return And(collapse_triple_negation(a), collapse_triple_negation(b))
        case Or(a, b):
            return Or(collapse_triple_negation(a), collapse_triple_negation(b))
        case Imp(a, b):
            return Imp(collapse_triple_negation(a), collapse_triple_negation(b))
        case Forall(x, body):
            return Forall(x, collapse_triple_negation(body))
        case Exists(x, body):
            return Exists(x, collapse_triple_negation(body))
    raise TypeError(f"Not a formula: {f!r}")


def fresh_atom(avoid: AbstractSet[str]) -> str:
    """Return the first of ``_f0``, ``_f1``, ... not in ``avoid``."""
    index = 0
    while f"{FRESH_PREFIX}{index}" in avoid:
        index += 1
    return f"{FRESH_PREFIX}{index}"


def atoms(f: Formula) -> Set[str]:
    """Predicate names occurring in ``f``."""
    return {a.pred for a in subformulas(f) if isinstance(a, Atom)}


def atom_arities(f: Formula) -> Dict[str, Set[int]]:
    """Map each predicate name to the arities it is used with."""
    arities: Dict[str, Set[int]] = {}
    for a in subformulas(f):
        if isinstance(a, Atom):
            arities.setdefault(a.pred, set()).add(a.arity)
    return arities


def free_vars(f: Formula) -> FrozenSet[str]:
    """Variables with a free occurrence in ``f``."""
    match f:
        case Bot():
            return frozenset()
        case Atom(_, args):
            return frozenset(t.name for t in args if isinstance(t, Var))
        case And(a, b) | Or(a, b) | Imp(a, b):
            return free_vars(a) | free_vars(b)
        case Forall(x, body) | Exists(x, body):
            return free_vars(body) - {x}
    raise TypeError(f"Not a formula: {f!r}")


def bound_vars(f: Formula) -> FrozenSet[str]:
    """Variables bound by some quantifier in ``f``."""
    return frozenset(
        g.var for g in subformulas(f) if isinstance(g, (Forall, Exists))
    )


def size(f: Formula) -> int:
    """Number of AST nodes (terms not counted)."""
    match f:
        case Bot() | Atom():
            return 1
        case And(a, b) | Or(a, b) | Imp(a, b):
            return 1 + size(a) + size(b)
        case Forall(_, body) | Exists(_, body):
            return 1 + size(body)
    raise TypeError(f"Not a formula: {f!r}")


def depth(f: Formula) -> int:
    """Height of the AST; leaves have depth 0."""
    match f:
        case Bot() | Atom():
            return 0
        case And(a, b) | Or(a, b) | Imp(a, b):
            return 1 + max(depth(a), depth(b))
        case Forall(_, body) | Exists(_, body):
            return 1 + depth(body)
    raise TypeError(f"Not a formula: {f!r}")


def has_quantifiers(f: Formula) -> bool:
    return any(isinstance(g, (Forall, Exists)) for g in subformulas(f))


def is_propositional(f: Formula) -> bool:
    """Quantifier-free with only nullary atoms."""
    return all(
        not isinstance(g, (Forall, Exists)) and not (isinstance(g, Atom) and g.args)
        for g in subformulas(f)
    )


def subformulas(f: Formula) -> List[Formula]:
    """Distinct subformulas in a fixed pre-order, ``f`` first."""
    seen: Dict[Formula, None] = {}
    stack = [f]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen[g] = None
        match g:
            case And(a, b) | Or(a, b) | Imp(a, b):
                stack.append(b)
                stack.append(a)
            case Forall(_, body) | Exists(_, body):
                stack.append(body)
    return list(seen)
