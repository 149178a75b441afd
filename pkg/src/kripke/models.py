"""Kripke model records.

Three families: finite rooted posets, the infinite chain over the naturals
with domain ``{0..k}`` at node ``k``, and a fresh root grafted below several
existing models.
"""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple, Union

import numpy as np

from src.errors import ModelError

Threshold = Union[int, float]
INF: float = math.inf

AtomFact = Tuple[int, str, Tuple[int, ...]]


def is_threshold(value: object) -> bool:
    """True for naturals and for infinity."""
    if isinstance(value, bool):
        return False
    if isinstance(value, int):
        return value >= 0
    return value == INF


def reflexive_transitive_closure(
    nodes: Tuple[int, ...], edges: Iterable[Tuple[int, int]]
) -> FrozenSet[Tuple[int, int]]:
    """Warshall closure of ``edges`` over ``nodes``.

    Args:
        nodes: Node ids
        edges: Generating pairs ``(lower, upper)``

    Returns:
        All pairs ``(a, b)`` with ``a <= b``
    """
    index = {n: i for i, n in enumerate(nodes)}
    reach = np.eye(len(nodes), dtype=bool)
    for low, high in edges:
        if low not in index or high not in index:
            raise ModelError(f"Edge ({low}, {high}) mentions an unknown node")
        reach[index[low], index[high]] = True

    for k in range(len(nodes)):
        reach |= np.outer(reach[:, k], reach[k, :])

    rows, cols = np.nonzero(reach)
    return frozenset((nodes[int(i)], nodes[int(j)]) for i, j in zip(rows, cols))


@dataclass(frozen=True)
class FiniteModel:
    """Finite rooted Kripke model.

    ``order`` holds every pair ``(a, b)`` with ``a <= b``; use :meth:`build`
    to derive it from generating edges.
    """

    nodes: Tuple[int, ...]
    order: FrozenSet[Tuple[int, int]]
    root: int
    domains: Mapping[int, FrozenSet[int]]
    atoms: FrozenSet[AtomFact] = frozenset()

    def __post_init__(self):
        """Normalise containers; store copies so later edits cannot leak in."""
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "order", frozenset(self.order))
        object.__setattr__(
            self, "domains", {n: frozenset(d) for n, d in self.domains.items()}
        )
        object.__setattr__(
            self,
            "atoms",
            frozenset((n, p, tuple(args)) for n, p, args in self.atoms),
        )

    @classmethod
    def build(
        cls,
        nodes: Iterable[int],
        edges: Iterable[Tuple[int, int]],
        root: int,
        domains: Mapping[int, Iterable[int]],
        atoms: Iterable[AtomFact] = (),
    ) -> "FiniteModel":
        """Build a model whose order is the reflexive-transitive closure of ``edges``."""
        node_tuple = tuple(nodes)
        return cls(
            nodes=node_tuple,
            order=reflexive_transitive_closure(node_tuple, edges),
            root=root,
            domains={n: frozenset(d) for n, d in domains.items()},
            atoms=frozenset((n, p, tuple(args)) for n, p, args in atoms),
        )

    @cached_property
    def successors(self) -> Dict[int, FrozenSet[int]]:
        """Map each node to the nodes above or equal to it."""
        above: Dict[int, set] = {n: set() for n in self.nodes}
        for low, high in self.order:
            above.setdefault(low, set()).add(high)
        return {n: frozenset(s) for n, s in above.items()}

    def domain(self, node: int) -> FrozenSet[int]:
        return self.domains.get(node, frozenset())

    def with_atoms(self, extra: Iterable[AtomFact]) -> "FiniteModel":
        """Copy of the model with additional atom facts."""
        return FiniteModel(
            nodes=self.nodes,
            order=self.order,
            root=self.root,
            domains=self.domains,
            atoms=self.atoms | frozenset((n, p, tuple(a)) for n, p, a in extra),
        )


@dataclass(frozen=True)
class OmegaChainModel:
    """The chain 0 <= 1 <= 2 <= ... with domain ``{0..k}`` at node ``k``.

    A unary predicate with offset ``c`` holds of ``d`` from node ``d + c`` on;
    a nullary predicate holds from its threshold on (never when infinite).
    """

    unary: Mapping[str, int] = field(default_factory=dict)
    nullary: Mapping[str, Threshold] = field(default_factory=dict)

    def __post_init__(self):
        """Validate fields after initialization."""
        object.__setattr__(self, "unary", dict(self.unary))
        object.__setattr__(self, "nullary", dict(self.nullary))
        for pred, offset in self.unary.items():
            if isinstance(offset, bool) or not isinstance(offset, int) or offset < 1:
                raise ModelError(f"Offset of unary predicate '{pred}' must be an integer >= 1")
        for pred, threshold in self.nullary.items():
            if not is_threshold(threshold):
                raise ModelError(f"Threshold of nullary predicate '{pred}' must be a natural or inf")
        shared = set(self.unary) & set(self.nullary)
        if shared:
            raise ModelError(f"Predicates declared both unary and nullary: {sorted(shared)}")


ChildModel = Union[FiniteModel, OmegaChainModel]


@dataclass(frozen=True)
class GraftedModel:
    """A fresh root placed below the bottom nodes of several models."""

    root_domain: FrozenSet[int]
    root_atoms: FrozenSet[Tuple[str, Tuple[int, ...]]] = frozenset()
    children: Tuple[ChildModel, ...] = ()

    def __post_init__(self):
        """Normalise containers."""
        object.__setattr__(self, "root_domain", frozenset(self.root_domain))
        object.__setattr__(
            self, "root_atoms", frozenset((p, tuple(a)) for p, a in self.root_atoms)
        )
        object.__setattr__(self, "children", tuple(self.children))


KripkeModel = Union[FiniteModel, OmegaChainModel, GraftedModel]
