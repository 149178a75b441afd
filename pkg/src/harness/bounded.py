"""Exhaustive countermodel search over small rooted posets."""

import itertools
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from src.formula import Formula, atoms
from src.kripke import FiniteEvaluator, FiniteModel, reflexive_transitive_closure
from src.prove.classical import require_propositional

Edges = Tuple[Tuple[int, int], ...]

# Rooted posets up to isomorphism, root 0, listed by generating edges.
ROOTED_POSETS: Dict[int, Tuple[Edges, ...]] = {
    1: ((),),
    2: (((0, 1),),),
    3: (((0, 1), (1, 2)), ((0, 1), (0, 2))),
}


def rooted_posets(max_nodes: int) -> Iterator[Tuple[int, Edges]]:
    """Yield ``(node_count, edges)`` for every rooted poset with at most ``max_nodes`` nodes."""
    if not 1 <= max_nodes <= max(ROOTED_POSETS):
        raise ValueError(f"max_nodes must be between 1 and {max(ROOTED_POSETS)}")
    for n in range(1, max_nodes + 1):
        for edges in ROOTED_POSETS[n]:
            yield n, edges


def up_sets(n: int, edges: Edges) -> List[FrozenSet[int]]:
    """All upward-closed node sets of the poset, empty set included."""
    nodes = tuple(range(n))
    order = reflexive_transitive_closure(nodes, edges)
    result = []
    for bits in itertools.product((False, True), repeat=n):
        chosen = frozenset(i for i in nodes if bits[i])
        if all(b in chosen for a, b in order if a in chosen):
            result.append(chosen)
    return result


def bounded_countermodel(a: Formula, max_nodes: int = 3) -> Optional[FiniteModel]:
    """First model with at most ``max_nodes`` nodes whose root does not force ``a``.

    Every rooted poset and every monotone valuation of the atoms of ``a`` is
    tried; domains are ``{0}``.

    Args:
        a: Propositional formula
        max_nodes: Largest poset size (at most 3)

    Returns:
        A countermodel, or None when every small model forces ``a``
    """
    require_propositional(a)
    names = sorted(atoms(a))
    for n, edges in rooted_posets(max_nodes):
        candidates = up_sets(n, edges)
        skeleton = FiniteModel.build(
            nodes=range(n), edges=edges, root=0, domains={i: {0} for i in range(n)}
        )
        for valuation in itertools.product(candidates, repeat=len(names)):
            facts = [(node, name, ()) for name, ups in zip(names, valuation) for node in ups]
            model = skeleton.with_atoms(facts)
            if 0 not in FiniteEvaluator(model, check=False).nodes_forcing(a):
                return model
    return None
