"""Forcing on finite Kripke models."""

from typing import Dict, FrozenSet

from src.errors import ModelError, UnsupportedFormulaError
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
    substitute_var,
)
from src.kripke.models import FiniteModel
from src.kripke.validate import require_valid


class FiniteEvaluator:
    """Computes, per subformula, the set of nodes forcing it.

    Results are cached per instance, so reuse an evaluator when asking many
    questions of one model.
    """

    def __init__(self, model: FiniteModel, check: bool = True):
        """
        Args:
            model: Model to evaluate in
            check: Validate the model first
        """
        if check:
            require_valid(model)
        self.model = model
        self._cache: Dict[Formula, FrozenSet[int]] = {}
        self._all = frozenset(model.nodes)

    def nodes_forcing(self, f: Formula) -> FrozenSet[int]:
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        result = self._compute(f)
        self._cache[f] = result
        return result

    def _compute(self, f: Formula) -> FrozenSet[int]:
        m = self.model
        match f:
            case Bot():
                return frozenset()
            case Atom(pred, args):
                values = []
                for t in args:
                    if not isinstance(t, Elem):
                        raise UnsupportedFormulaError(f"Free variable {t.name} in {f}")
                    values.append(t.value)
                key = tuple(values)
                return frozenset(n for n, p, a in m.atoms if p == pred and a == key)
            case And(a, b):
                return self.nodes_forcing(a) & self.nodes_forcing(b)
            case Or(a, b):
                return self.nodes_forcing(a) | self.nodes_forcing(b)
            case Imp(a, b):
                sa, sb = self.nodes_forcing(a), self.nodes_forcing(b)
                return frozenset(
                    n for n in m.nodes if all(k in sb for k in m.successors[n] if k in sa)
                )
            case Forall(x, body):
                return frozenset(
                    n
                    for n in m.nodes
                    if all(
                        k in self.nodes_forcing(substitute_var(body, x, d))
                        for k in m.successors[n]
                        for d in m.domain(k)
                    )
                )
            case Exists(x, body):
                return frozenset(
                    n
                    for n in m.nodes
                    if any(n in self.nodes_forcing(substitute_var(body, x, d)) for d in m.domain(n))
                )
        raise TypeError(f"Not a formula: {f!r}")


def forcing_nodes(m: FiniteModel, a: Formula) -> FrozenSet[int]:
    """Nodes of ``m`` forcing the closed formula ``a``."""
    return FiniteEvaluator(m).nodes_forcing(a)


def forces_finite(m: FiniteModel, node: int, a: Formula) -> bool:
    """Decide ``node |- a`` in a finite model.

    Args:
        m: Well-formed finite model
        node: Node of ``m``
        a: Closed formula over elements of the domains

    Returns:
        Whether ``node`` forces ``a``

    Raises:
        ModelError: If ``m`` is malformed or ``node`` is not one of its nodes
        UnsupportedFormulaError: If ``a`` has free variables
    """
    evaluator = FiniteEvaluator(m)
    if node not in evaluator.model.nodes:
        raise ModelError(f"Node {node} is not in the model")
    return node in evaluator.nodes_forcing(a)
