"""
Formula layer

AST, text syntax, structural predicates and substitutions shared by every
other layer.
"""

from src.formula.parser import parse
from src.formula.printer import print_formula
from src.formula.structure import (
    atom_arities,
    atoms,
    bound_vars,
    collapse_triple_negation,
    depth,
    free_vars,
    fresh_atom,
    has_quantifiers,
    is_nf,
    is_propositional,
    size,
    subformulas,
    substitute_atom,
    substitute_bot,
    substitute_var,
)
from src.formula.syntax import (
    BOT,
    BOT_TOKEN,
    And,
    Atom,
    Bot,
    Elem,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Term,
    Var,
    atom,
    conj,
    iff,
    neg,
)

__all__ = [
    "BOT",
    "BOT_TOKEN",
    "And",
    "Atom",
    "Bot",
    "Elem",
    "Exists",
    "Forall",
    "Formula",
    "Imp",
    "Or",
    "Term",
    "Var",
    "atom",
    "atom_arities",
    "atoms",
    "bound_vars",
    "collapse_triple_negation",
    "conj",
    "depth",
    "free_vars",
    "fresh_atom",
    "has_quantifiers",
    "iff",
    "is_nf",
    "is_propositional",
    "neg",
    "parse",
    "print_formula",
    "size",
    "subformulas",
    "substitute_atom",
    "substitute_bot",
    "substitute_var",
]
