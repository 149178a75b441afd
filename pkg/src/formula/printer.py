"""Canonical text rendering; the output reparses to an equal formula."""

from src.formula.syntax import (
    And,
    Atom,
    Bot,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
)

# Binding levels, loosest first.
_IMP, _OR, _AND, _UNARY = 1, 2, 3, 4


def _level(f: Formula) -> int:
    match f:
        case And(Imp(a, b), Imp(b2, a2)) if a == a2 and b == b2:
            return _IMP
        case Imp(_, Bot()):
            return _UNARY
        case Imp():
            return _IMP
        case Or():
            return _OR
        case And():
            return _AND
        case _:
            return _UNARY


def _render(f: Formula, prec: int, open_ok: bool) -> str:
    """Render ``f`` in a slot that needs binding level ``prec``.

    ``open_ok`` is true when nothing but a closing parenthesis or the end of
    input follows the slot, so a dotted quantifier may run to the right.
    """
    if _level(f) < prec:
        return "(" + _render(f, _IMP, True) + ")"

    match f:
        case Bot():
            return "bot"
        case Atom(pred, ()):
            return pred
        case Atom(pred, args):
            return f"{pred}({', '.join(str(t) for t in args)})"
        case And(Imp(a, b), Imp(b2, a2)) if a == a2 and b == b2:
            return f"{_render(a, _OR, False)} <-> {_render(b, _IMP, open_ok)}"
        case Imp(a, Bot()):
            return "~" + _render(a, _UNARY, open_ok)
        case Imp(a, b):
            return f"{_render(a, _OR, False)} -> {_render(b, _IMP, open_ok)}"
        case Or(a, b):
            return f"{_render(a, _OR, False)} | {_render(b, _AND, open_ok)}"
        case And(a, b):
            return f"{_render(a, _AND, False)} & {_render(b, _UNARY, open_ok)}"
        case Forall(var, body) | Exists(var, body):
            keyword = "forall" if isinstance(f, Forall) else "exists"
            text = f"{keyword} {var}. {_render(body, _IMP, True)}"
            return text if open_ok else f"({text})"
    raise TypeError(f"Not a formula: {f!r}")


def print_formula(f: Formula) -> str:
    """Render a formula, resugaring ``A -> bot`` as ``~A`` and biimplications.

    Args:
        f: Formula to render

    Returns:
        Text in the parser's grammar
    """
    return _render(f, _IMP, True)
