"""Forcing at the root of a grafted model.

Above the root, each child is an upward-closed part of the combined model,
so forcing there is decided by the child's own machinery. Only the root
clauses need the combination.
"""

from src.errors import UnsupportedFormulaError
from src.formula import (
    And,
    Atom,
    Bot,
    Elem,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    free_vars,
    substitute_var,
)
from src.kripke.chain import chain_threshold
from src.kripke.finite import FiniteEvaluator
from src.kripke.models import ChildModel, FiniteModel, GraftedModel
from src.kripke.validate import require_valid


class _ChildBottoms:
    """Answers 'does the bottom node of child i force A?' with per-child caches."""

    def __init__(self, children: tuple):
        self._children = children
        self._evaluators = {
            i: FiniteEvaluator(c, check=False)
            for i, c in enumerate(children)
            if isinstance(c, FiniteModel)
        }

    def all_force(self, f: Formula) -> bool:
        return all(self._forces(i, c, f) for i, c in enumerate(self._children))

    def _forces(self, i: int, child: ChildModel, f: Formula) -> bool:
        if isinstance(child, FiniteModel):
            return child.root in self._evaluators[i].nodes_forcing(f)
        return chain_threshold(child, f) == 0


def forces_grafted(m: GraftedModel, a: Formula) -> bool:
    """Decide whether the root of ``m`` forces the closed formula ``a``.

    Raises:
        ModelError: If ``m`` (or a child) is malformed
        UnsupportedFormulaError: If ``a`` has free variables, or a chain
            child cannot interpret it
    """
    require_valid(m)
    fv = free_vars(a)
    if fv:
        raise UnsupportedFormulaError(f"Formula has free variables {sorted(fv)}")

    bottoms = _ChildBottoms(m.children)
    domain = sorted(m.root_domain)

    def at_root(f: Formula) -> bool:
        match f:
            case Bot():
                return False
            case Atom(pred, args):
                values = tuple(t.value for t in args if isinstance(t, Elem))
                return (pred, values) in m.root_atoms
            case And(b, c):
                return at_root(b) and at_root(c)
            case Or(b, c):
                return at_root(b) or at_root(c)
            case Imp(b, c):
                return (not at_root(b) or at_root(c)) and bottoms.all_force(f)
            case Forall(x, body):
                here = all(at_root(substitute_var(body, x, d)) for d in domain)
                return here and bottoms.all_force(f)
            case Exists(x, body):
                return any(at_root(substitute_var(body, x, d)) for d in domain)
        raise TypeError(f"Not a formula: {f!r}")

    return at_root(a)
