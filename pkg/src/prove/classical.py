"""Truth-table decision for classical propositional logic.

All ``2**n`` valuations are evaluated at once as numpy boolean columns.
"""

from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from src.errors import UnsupportedFormulaError
from src.formula import And, Atom, Bot, Formula, Imp, Or, atoms, is_propositional

# Valuations are evaluated in blocks of 2**20 rows, a few megabytes per column.
MAX_CLASSICAL_ATOMS = 20


def require_propositional(a: Formula) -> None:
    if not is_propositional(a):
        raise UnsupportedFormulaError(
            f"Propositional deciders take quantifier-free formulas with nullary atoms, got {a}"
        )


def _columns(names: Sequence[str], start: int = 0) -> Dict[str, np.ndarray]:
    """Columns for the rows ``start`` to ``start + 2**k``, ``k`` capped at ``MAX_CLASSICAL_ATOMS``."""
    width = min(len(names), MAX_CLASSICAL_ATOMS)
    rows = np.arange(start, start + (1 << width), dtype=np.int64)
    return {name: ((rows >> i) & 1).astype(bool) for i, name in enumerate(names)}


def _evaluate(f: Formula, columns: Dict[str, np.ndarray], n_rows: int, memo: Dict) -> np.ndarray:
    cached = memo.get(f)
    if cached is not None:
        return cached
    match f:
        case Bot():
            result = np.zeros(n_rows, dtype=bool)
        case Atom(pred):
            result = columns[pred]
        case And(a, b):
            result = _evaluate(a, columns, n_rows, memo) & _evaluate(b, columns, n_rows, memo)
        case Or(a, b):
            result = _evaluate(a, columns, n_rows, memo) | _evaluate(b, columns, n_rows, memo)
        case Imp(a, b):
            result = ~_evaluate(a, columns, n_rows, memo) | _evaluate(b, columns, n_rows, memo)
        case _:
            raise UnsupportedFormulaError(f"No truth table for {f}")
    memo[f] = result
    return result


def falsifying_valuation(hyps: Iterable[Formula], goal: Formula) -> Optional[Dict[str, bool]]:
    """A valuation making every hypothesis true and ``goal`` false, if one exists.

    Args:
        hyps: Propositional hypotheses
        goal: Propositional goal

    Returns:
        Assignment over the atoms involved, or None when ``hyps`` entail ``goal``
    """
    hyp_list: List[Formula] = list(hyps)
    names = sorted(set().union(atoms(goal), *(atoms(h) for h in hyp_list)))
    block = 1 << min(len(names), MAX_CLASSICAL_ATOMS)

    for start in range(0, 1 << len(names), block):
        columns = _columns(names, start)
        memo: Dict = {}
        bad = ~_evaluate(goal, columns, block, memo)
        for h in hyp_list:
            bad &= _evaluate(h, columns, block, memo)
        hits = np.flatnonzero(bad)
        if hits.size:
            row = start + int(hits[0])
            return {name: bool((row >> i) & 1) for i, name in enumerate(names)}
    return None


def classically_entails(hyps: Iterable[Formula], goal: Formula) -> bool:
    return falsifying_valuation(hyps, goal) is None


class TruthTable:
    """Truth table over a fixed atom set that keeps every column it evaluates.

    One table serves a whole proof search, so each subformula is evaluated
    once no matter how many sequents mention it.
    """

    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(set(names)))
        self._columns = _columns(self.names)
        self._rows = 1 << len(self.names)
        self._memo: Dict = {}

    def entails(self, hyps: Iterable[Formula], goal: Formula) -> bool:
        """Whether every row satisfying all of ``hyps`` satisfies ``goal``.

        Raises:
            KeyError: If a formula mentions an atom outside the table
        """
        bad = ~_evaluate(goal, self._columns, self._rows, self._memo)
        for h in hyps:
            bad &= _evaluate(h, self._columns, self._rows, self._memo)
            if not bad.any():
                return True
        return not bad.any()


def classically_valid(a: Formula) -> bool:
    """Whether ``a`` is a classical tautology."""
    require_propositional(a)
    return falsifying_valuation((), a) is None
