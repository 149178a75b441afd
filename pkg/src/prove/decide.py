"""Public decision operations for CPC, IPC and MPC."""

import logging
from typing import Tuple

from src.formula import Atom, Formula, atoms, fresh_atom, iff, neg, substitute_bot
from src.prove.classical import falsifying_valuation, require_propositional
from src.prove.intuitionistic import SequentProver
from src.prove.types import Decision, Logic, ScaleClass, Status

LOGGER = logging.getLogger(__name__)


def minimal_reduct(a: Formula) -> Formula:
    """``a`` with ``bot`` replaced by a fresh atom, so MPC reduces to IPC."""
    return substitute_bot(a, Atom(fresh_atom(atoms(a))))


def _target(logic: Logic, a: Formula) -> Formula:
    return minimal_reduct(a) if logic is Logic.MPC else a


def is_provable(logic: Logic, a: Formula) -> bool:
    """Verdict only, without building a countermodel.

    Raises:
        UnsupportedFormulaError: If ``a`` has quantifiers or non-nullary atoms
    """
    require_propositional(a)
    target = _target(logic, a)
    if logic is Logic.CPC:
        return falsifying_valuation((), target) is None
    return SequentProver().provable((), target)


def decide(logic: Logic, a: Formula) -> Decision:
    """Decide ``a`` in ``logic``.

    Args:
        logic: CPC, IPC or MPC
        a: Quantifier-free formula over nullary atoms

    Returns:
        Decision, with a falsifying valuation (CPC) or a countermodel
        (IPC, MPC) when unprovable

    Raises:
        UnsupportedFormulaError: If ``a`` has quantifiers or non-nullary atoms
    """
    require_propositional(a)
    target = _target(logic, a)

    if logic is Logic.CPC:
        valuation = falsifying_valuation((), target)
        status = Status.PROVABLE if valuation is None else Status.UNPROVABLE
        LOGGER.debug("cpc %s: %s", status.value, a)
        return Decision(logic, status, target, valuation=valuation)

    prover = SequentProver()
    if prover.provable((), target):
        LOGGER.debug("%s provable after %d sequents: %s", logic.value, prover.sequents_searched, a)
        return Decision(logic, Status.PROVABLE, target)

    model = prover.countermodel(target)
    LOGGER.debug(
        "%s unprovable, countermodel of %d nodes: %s", logic.value, len(model.nodes), a
    )
    return Decision(logic, Status.UNPROVABLE, target, countermodel=model)


def equivalent(logic: Logic, a: Formula, b: Formula) -> Decision:
    """Decide ``a <-> b`` in ``logic``."""
    return decide(logic, iff(a, b))


def scale_verdicts(a: Formula) -> Tuple[bool, bool, bool, bool]:
    """``(CPC |- a, IPC |- a, CPC |- ~a, IPC |- ~a)``."""
    return (
        is_provable(Logic.CPC, a),
        is_provable(Logic.IPC, a),
        is_provable(Logic.CPC, neg(a)),
        is_provable(Logic.IPC, neg(a)),
    )


def classify_scale(a: Formula) -> ScaleClass:
    """Place ``a`` on the provability-refutability scale."""
    cl_a, il_a, cl_not, il_not = scale_verdicts(a)
    if il_a:
        return ScaleClass.STRONGLY_PROVABLE
    if cl_a:
        return ScaleClass.PROVABLE_NOT_STRONGLY
    if il_not:
        return ScaleClass.STRONGLY_REFUTABLE
    if cl_not:
        return ScaleClass.REFUTABLE_NOT_STRONGLY
    return ScaleClass.UNDECIDABLE


def scale_consistent(a: Formula, scale: ScaleClass) -> bool:
    """Whether ``scale`` agrees with the four verdicts and they form a possible pattern.

    Impossible patterns: intuitionistic without classical provability, and
    a formula provable and refutable at once.
    """
    cl_a, il_a, cl_not, il_not = scale_verdicts(a)
    if (il_a and not cl_a) or (il_not and not cl_not) or (cl_a and cl_not):
        return False
    expected = {
        ScaleClass.STRONGLY_PROVABLE: il_a,
        ScaleClass.PROVABLE_NOT_STRONGLY: cl_a and not il_a,
        ScaleClass.STRONGLY_REFUTABLE: il_not,
        ScaleClass.REFUTABLE_NOT_STRONGLY: cl_not and not il_not,
        ScaleClass.UNDECIDABLE: not cl_a and not cl_not,
    }
    return expected[scale] and sum(expected.values()) == 1
