"""Ready-made models and the formulas they separate.

``chain``      the omega-chain with one unary predicate P of offset 1
``single``     one node, domain {0}, P(0) forced
``grafted``    a root with domain {0} below ``single`` plus Q, and below the
               chain extended by a nullary Q that is never forced

``fig3``, ``fig4`` and ``fig5`` are accepted for ``chain``, ``single`` and
``grafted``.
"""

from typing import Callable, Dict

from src.errors import ConfigError
from src.formula import (
    Forall,
    Formula,
    Imp,
    Or,
    And,
    atom,
    neg,
)
from src.kripke.models import INF, FiniteModel, GraftedModel, KripkeModel, OmegaChainModel


def chain_model() -> OmegaChainModel:
    return OmegaChainModel(unary={"P": 1})


def single_node_model() -> FiniteModel:
    return FiniteModel.build(nodes=[0], edges=[], root=0, domains={0: {0}}, atoms=[(0, "P", (0,))])


def grafted_model() -> GraftedModel:
    left = single_node_model().with_atoms([(0, "Q", ())])
    right = OmegaChainModel(unary={"P": 1}, nullary={"Q": INF})
    return GraftedModel(root_domain=frozenset({0}), root_atoms=frozenset(), children=(left, right))


PRESETS: Dict[str, Callable[[], KripkeModel]] = {
    "chain": chain_model,
    "single": single_node_model,
    "grafted": grafted_model,
    # alternative names for the same three models
    "fig3": chain_model,
    "fig4": single_node_model,
    "fig5": grafted_model,
}


def preset(name: str) -> KripkeModel:
    """Build a preset model by name."""
    try:
        return PRESETS[name]()
    except KeyError:
        raise ConfigError(f"Unknown preset '{name}' (choose from {', '.join(PRESETS)})")


def unbounded_predicate_formula() -> Formula:
    """``~forall x P(x) & forall x ~~P(x)``: classically refutable, forced on the chain."""
    p = atom("P", "x")
    return And(neg(Forall("x", p)), Forall("x", neg(neg(p))))


def separating_formula() -> Formula:
    """``((Q -> F) -> F) -> (~~Q | F)`` with F the unbounded predicate formula.

    Intuitionistically false at the root of the grafted preset, which
    separates the two relativised double negations.
    """
    f = unbounded_predicate_formula()
    q = atom("Q")
    return Imp(Imp(Imp(q, f), f), Or(neg(neg(q)), f))
