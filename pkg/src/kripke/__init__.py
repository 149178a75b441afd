"""
Kripke layer

Finite models, the omega-chain threshold calculus, grafted models,
well-formedness checks, presets and JSON descriptions.
"""

from src.kripke.chain import (
    ThresholdFn,
    chain_forces,
    chain_forces_bruteforce,
    chain_threshold,
    chain_threshold_fn,
    exists_threshold,
    forall_threshold,
    implication_threshold,
)
from src.kripke.finite import FiniteEvaluator, forces_finite, forcing_nodes
from src.kripke.grafted import forces_grafted
from src.kripke.models import (
    INF,
    ChildModel,
    FiniteModel,
    GraftedModel,
    KripkeModel,
    OmegaChainModel,
    Threshold,
    is_threshold,
    reflexive_transitive_closure,
)
from src.kripke.presets import (
    PRESETS,
    chain_model,
    grafted_model,
    preset,
    separating_formula,
    single_node_model,
    unbounded_predicate_formula,
)
from src.kripke.serialization import load_model, load_model_file, model_to_dict
from src.kripke.validate import Violation, require_valid, validate_model

__all__ = [
    "INF",
    "PRESETS",
    "ChildModel",
    "FiniteEvaluator",
    "FiniteModel",
    "GraftedModel",
    "KripkeModel",
    "OmegaChainModel",
    "Threshold",
    "ThresholdFn",
    "Violation",
    "chain_forces",
    "chain_forces_bruteforce",
    "chain_model",
    "chain_threshold",
    "chain_threshold_fn",
    "exists_threshold",
    "forall_threshold",
    "forces_finite",
    "forces_grafted",
    "forcing_nodes",
    "grafted_model",
    "implication_threshold",
    "is_threshold",
    "load_model",
    "load_model_file",
    "model_to_dict",
    "preset",
    "reflexive_transitive_closure",
    "require_valid",
    "separating_formula",
    "single_node_model",
    "unbounded_predicate_formula",
    "validate_model",
]
