"""Proof search for intuitionistic propositional logic.

The calculus is the contraction-free sequent calculus G4ip: every rule
application shrinks the sequent in a well-founded order, so search
terminates without loop checks. Invertible rules are applied eagerly and
without backtracking; backtracking is only needed for ``|``-right and the
``(C -> D) -> B`` left rule.

Failed searches are turned into finite Kripke countermodels whose worlds are
saturated theories over the subformulas of the query.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from src.formula import And, Atom, Bot, Formula, Imp, Or, atoms, subformulas
from src.kripke.models import FiniteModel
from src.prove.classical import TruthTable

LOGGER = logging.getLogger(__name__)

# Classical assistance keeps a truth table over every atom of the search.
MAX_ASSISTED_ATOMS = 12

Sequent = Tuple[FrozenSet[Formula], Formula]


def _saturate(hyps: Iterable[Formula], goal: Formula) -> Tuple[bool, Set[Formula], Formula]:
    """Apply the invertible single-premise rules until none applies.

    Returns:
        ``(closed, context, goal)``; ``closed`` means an axiom was reached
    """
    context: Set[Formula] = set()
    pending: List[Formula] = list(hyps)

    while True:
        while isinstance(goal, Imp):
            pending.append(goal.lhs)
            goal = goal.rhs
        if not pending:
            break

        h = pending.pop()
        if h in context:
            continue
        match h:
            case Bot():
                return True, context, goal
            case And(a, b):
                pending.extend((a, b))
            case Imp(Bot(), _):
                pass
            case Imp(Atom() as p, b) if p in context:
                pending.append(b)
            case Imp(And(c, d), b):
                pending.append(Imp(c, Imp(d, b)))
            case Imp(Or(c, d), b):
                pending.extend((Imp(c, b), Imp(d, b)))
            case Atom():
                context.add(h)
                released = [g for g in context if isinstance(g, Imp) and g.lhs == h]
                for g in released:
                    context.discard(g)
                    pending.append(g.rhs)
            case _:
                context.add(h)

    return goal in context, context, goal


class SequentProver:
    """G4ip search with a memo of decided sequents.

    One instance per decision: the memo is private, so concurrent deciders
    never share state.
    """

    def __init__(self, classical_pruning: bool = True, classical_bot_goals: bool = True):
        """
        Args:
            classical_pruning: Refute sequents that are not even classically
                valid. Switched off for searches over more than
                ``MAX_ASSISTED_ATOMS`` atoms.
            classical_bot_goals: With pruning on, settle sequents whose goal
                is ``bot`` by their classical validity
        """
        self.classical_pruning = classical_pruning
        self.classical_bot_goals = classical_bot_goals
        self._assisted = classical_pruning
        self._table: Optional[TruthTable] = None
        self._memo: Dict[Sequent, bool] = {}
        self.sequents_searched = 0

    def provable(self, hyps: Iterable[Formula], goal: Formula) -> bool:
        """Whether ``hyps |- goal`` holds intuitionistically."""
        closed, context, goal = _saturate(hyps, goal)
        if closed:
            return True
        key = (frozenset(context), goal)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        self.sequents_searched += 1
        result = self._search(key[0], goal)
        self._memo[key] = result
        return result

    def _classically(self, context: FrozenSet[Formula], goal: Formula) -> Optional[bool]:
        """Classical validity of the sequent, or None without classical assistance."""
        if not self._assisted:
            return None
        if self._table is not None:
            try:
                return self._table.entails(context, goal)
            except KeyError:
                pass
        names = atoms(goal).union(*(atoms(h) for h in context))
        if self._table is not None:
            names.update(self._table.names)
        if len(names) > MAX_ASSISTED_ATOMS:
            LOGGER.debug("%d atoms, searching without classical assistance", len(names))
            self._assisted = False
            return None
        self._table = TruthTable(names)
        return self._table.entails(context, goal)

    def _search(self, context: FrozenSet[Formula], goal: Formula) -> bool:
        classical = self._classically(context, goal)
        if classical is False:
            return False
        if classical and self.classical_bot_goals and isinstance(goal, Bot):
            # Glivenko: with goal bot, intuitionistic and classical provability coincide
            return True

        for h in context:
            if isinstance(h, Or):
                rest = context - {h}
                return self.provable(rest | {h.lhs}, goal) and self.provable(rest | {h.rhs}, goal)

        if isinstance(goal, And):
            return self.provable(context, goal.lhs) and self.provable(context, goal.rhs)

        if isinstance(goal, Or):
            if self.provable(context, goal.lhs) or self.provable(context, goal.rhs):
                return True

        nested = [h for h in context if isinstance(h, Imp) and isinstance(h.lhs, Imp)]
        # B |- goal follows from (C -> D) -> B |- goal, so each right premise is necessary
        for h in nested:
            if not self.provable((context - {h}) | {h.rhs}, goal):
                return False
        for h in nested:
            c, d = h.lhs.lhs, h.lhs.rhs
            if self.provable((context - {h}) | {Imp(d, h.rhs)}, Imp(c, d)):
                return True
        return False

    def countermodel(self, goal: Formula) -> FiniteModel:
        """Kripke model whose root does not force the unprovable ``goal``.

        Worlds are theories over the subformulas of ``goal``. Each is grown
        greedily from a seed while it still fails to prove its avoided
        formula, which makes it closed and prime within the subformulas;
        ``A -> B`` missing from a world is witnessed by growing the world
        plus ``A`` while avoiding ``B``. The order is inclusion.
        """
        universe = subformulas(goal)

        def extend(base: FrozenSet[Formula], avoid: Formula) -> FrozenSet[Formula]:
            theory = set(base)
            for s in universe:
                if s not in theory and not self.provable(theory | {s}, avoid):
                    theory.add(s)
            return frozenset(theory)

        root = extend(frozenset(), goal)
        worlds: List[FrozenSet[Formula]] = [root]
        index: Dict[FrozenSet[Formula], int] = {root: 0}
        cursor = 0
        while cursor < len(worlds):
            world = worlds[cursor]
            cursor += 1
            for s in universe:
                if isinstance(s, Imp) and s not in world:
                    witness = extend(world | {s.lhs}, s.rhs)
                    if witness not in index:
                        index[witness] = len(worlds)
                        worlds.append(witness)

        edges = [
            (index[u], index[v]) for u in worlds for v in worlds if u != v and u <= v
        ]
        facts = [
            (index[w], f.pred, ()) for w in worlds for f in w if isinstance(f, Atom)
        ]
        LOGGER.debug("Countermodel with %d worlds for %s", len(worlds), goal)
        return FiniteModel.build(
            nodes=range(len(worlds)),
            edges=edges,
            root=0,
            domains={i: {0} for i in range(len(worlds))},
            atoms=facts,
        )
