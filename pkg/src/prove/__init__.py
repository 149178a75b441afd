"""
Prove layer

Deciders for classical, intuitionistic and minimal propositional logic,
equivalence checks and the provability-refutability scale.
"""

from src.prove.classical import classically_entails, classically_valid, falsifying_valuation
from src.prove.decide import (
    classify_scale,
    decide,
    equivalent,
    is_provable,
    minimal_reduct,
    scale_consistent,
    scale_verdicts,
)
from src.prove.intuitionistic import SequentProver
from src.prove.types import Decision, Logic, ScaleClass, Status

__all__ = [
    "Decision",
    "Logic",
    "ScaleClass",
    "SequentProver",
    "Status",
    "classically_entails",
    "classically_valid",
    "classify_scale",
    "decide",
    "equivalent",
    "falsifying_valuation",
    "is_provable",
    "minimal_reduct",
    "scale_consistent",
    "scale_verdicts",
]
