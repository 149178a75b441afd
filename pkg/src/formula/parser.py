"""Formula text syntax.

Precedence, tightest first: ``~`` and quantifiers without a dot, ``&``,
``|``, then ``->`` / ``<->`` (right associative). ``forall x. A`` extends as
far right as possible; ``forall x A`` binds only the next unary formula.
"""

import logging
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from src.errors import FormulaSyntaxError
from src.formula.structure import free_vars
from src.formula.syntax import (
    BOT,
    And,
    Atom,
    Elem,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Var,
    iff,
    neg,
)

LOGGER = logging.getLogger(__name__)

# Closed levels never end in a dotted binder; the *_open levels do, and only
# appear where the formula can run to the closing parenthesis or the end.
FORMULA_GRAMMAR = r"""
    ?start: imp

    ?imp: disj
        | disj "->" imp                     -> imp
        | disj "<->" imp                    -> iff
        | disj_open

    ?disj_open: conj_open
              | disj "|" conj_open          -> or_

    ?conj_open: unary_open
              | conj "&" unary_open         -> and_

    ?unary_open: "~" unary_open             -> neg
               | "forall" NAME "." imp      -> forall
               | "exists" NAME "." imp      -> exists
               | "forall" NAME unary_open   -> forall
               | "exists" NAME unary_open   -> exists

    ?disj: conj
         | disj "|" conj                    -> or_

    ?conj: unary
         | conj "&" unary                   -> and_

    ?unary: "~" unary                       -> neg
          | "forall" NAME unary             -> forall
          | "exists" NAME unary             -> exists
          | atom

    ?atom: "bot"                            -> bot
         | NAME "(" term ("," term)* ")"    -> app
         | NAME                             -> prop
         | "(" imp ")"

    ?term: NAME                             -> var
         | INT                              -> elem

    NAME: /[A-Za-z_][A-Za-z0-9_']*/

    %import common.INT
    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class _FormulaBuilder(Transformer):
    """Builds the desugared AST while the LALR parser reduces."""

    def imp(self, lhs, rhs):
        return Imp(lhs, rhs)

    def iff(self, lhs, rhs):
        return iff(lhs, rhs)

    def or_(self, lhs, rhs):
        return Or(lhs, rhs)

    def and_(self, lhs, rhs):
        return And(lhs, rhs)

    def neg(self, body):
        return neg(body)

    def forall(self, name, body):
        return Forall(str(name), body)

    def exists(self, name, body):
        return Exists(str(name), body)

    def bot(self):
        return BOT

    def app(self, name, *terms):
        return Atom(str(name), tuple(terms))

    def prop(self, name):
        return Atom(str(name))

    def var(self, name):
        return Var(str(name))

    def elem(self, digits):
        return Elem(int(digits))


@lru_cache(maxsize=None)
def _parser() -> Lark:
    return Lark(FORMULA_GRAMMAR, parser="lalr", transformer=_FormulaBuilder())


def parse(text: str) -> Formula:
    """Parse formula text into its desugared AST.

    Args:
        text: Formula in the grammar documented at module level

    Returns:
        Parsed formula

    Raises:
        FormulaSyntaxError: If the text does not conform to the grammar
    """
    try:
        formula = _parser().parse(text)
    except UnexpectedInput as exc:
        line = max(getattr(exc, "line", 1) or 1, 1)
        column = max(getattr(exc, "column", 1) or 1, 1)
        detail = str(exc).strip().splitlines()[0] if str(exc).strip() else ""
        raise FormulaSyntaxError(text, line, column, detail) from exc
    except VisitError as exc:
        raise FormulaSyntaxError(text, 1, 1, str(exc.orig_exc)) from exc

    open_vars = free_vars(formula)
    if open_vars:
        LOGGER.info("Parsed open formula with free variables %s", sorted(open_vars))
    return formula
