"""Well-formedness checks for Kripke models."""

import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from src.errors import ModelError
from src.kripke.models import (
    ChildModel,
    FiniteModel,
    GraftedModel,
    KripkeModel,
    OmegaChainModel,
)

LOGGER = logging.getLogger(__name__)

NodeRef = Union[int, str]


@dataclass(frozen=True)
class Violation:
    """One broken well-formedness condition."""

    kind: str
    nodes: Tuple[NodeRef, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def _finite_violations(m: FiniteModel) -> List[Violation]:
    out: List[Violation] = []
    nodes = set(m.nodes)

    if m.root not in nodes:
        out.append(Violation("unknown-node", (m.root,), f"root {m.root} is not a node"))

    for low, high in sorted(m.order):
        if low not in nodes or high not in nodes:
            out.append(
                Violation("unknown-node", (low, high), f"order pair ({low}, {high}) mentions an unknown node")
            )
    for n in m.nodes:
        if (n, n) not in m.order:
            out.append(Violation("order-not-reflexive", (n,), f"{n} <= {n} is missing"))
    for a, b in m.order:
        if a != b and (b, a) in m.order and a < b:
            out.append(
                Violation("order-not-antisymmetric", (a, b), f"{a} <= {b} and {b} <= {a}")
            )
    for a, b in m.order:
        for c in m.successors.get(b, ()):
            if (a, c) not in m.order:
                out.append(
                    Violation("order-not-transitive", (a, b, c), f"{a} <= {b} <= {c} but not {a} <= {c}")
                )
    if m.root in nodes:
        for n in m.nodes:
            if (m.root, n) not in m.order:
                out.append(Violation("root-not-least", (m.root, n), f"root {m.root} is not below {n}"))

    for n in m.nodes:
        if not m.domain(n):
            out.append(Violation("empty-domain", (n,), f"node {n} has an empty domain"))
    for a, b in sorted(m.order):
        if a != b and not m.domain(a) <= m.domain(b):
            out.append(
                Violation("domain-not-monotone", (a, b), f"domain of {a} is not contained in domain of {b}")
            )

    for node, pred, args in sorted(m.atoms):
        if node not in nodes:
            out.append(Violation("unknown-node", (node,), f"atom {pred}{args} sits on unknown node {node}"))
            continue
        if not set(args) <= m.domain(node):
            out.append(
                Violation(
                    "atom-argument-out-of-domain",
                    (node,),
                    f"{pred}{args} uses elements outside the domain of {node}",
                )
            )
        for above in sorted(m.successors.get(node, ())):
            if (above, pred, args) not in m.atoms:
                out.append(
                    Violation(
                        "forcing-not-monotone",
                        (node, above),
                        f"{pred}{args} holds at {node} but not at {above}",
                    )
                )
    return out


def _bottom_domain(child: ChildModel):
    if isinstance(child, FiniteModel):
        return child.domain(child.root)
    return frozenset({0})


def _bottom_has_atom(child: ChildModel, pred: str, args: Tuple[int, ...]) -> bool:
    if isinstance(child, FiniteModel):
        return (child.root, pred, args) in child.atoms
    if args:
        return False
    return child.nullary.get(pred) == 0


def _grafted_violations(m: GraftedModel) -> List[Violation]:
    out: List[Violation] = []
    if not m.root_domain:
        out.append(Violation("empty-domain", ("root",), "grafted root has an empty domain"))

    for i, child in enumerate(m.children):
        for v in validate_model(child):
            nodes = tuple(f"child{i}:{n}" for n in v.nodes)
            out.append(Violation(v.kind, nodes, f"child {i}: {v.detail}"))
        if not m.root_domain <= _bottom_domain(child):
            out.append(
                Violation(
                    "domain-not-shared",
                    ("root", f"child{i}"),
                    f"root domain is not contained in the bottom domain of child {i}",
                )
            )

    for pred, args in sorted(m.root_atoms):
        if not set(args) <= m.root_domain:
            out.append(
                Violation(
                    "atom-argument-out-of-domain",
                    ("root",),
                    f"{pred}{args} uses elements outside the root domain",
                )
            )
        for i, child in enumerate(m.children):
            if not _bottom_has_atom(child, pred, args):
                out.append(
                    Violation(
                        "forcing-not-monotone",
                        ("root", f"child{i}"),
                        f"{pred}{args} holds at the root but not at the bottom of child {i}",
                    )
                )
    return out


def validate_model(m: KripkeModel) -> List[Violation]:
    """List every well-formedness violation of ``m`` (empty when valid).

    Chain models are validated on construction and always pass here.
    """
    if isinstance(m, FiniteModel):
        return _finite_violations(m)
    if isinstance(m, GraftedModel):
        return _grafted_violations(m)
    if isinstance(m, OmegaChainModel):
        return []
    raise TypeError(f"Not a Kripke model: {m!r}")


def require_valid(m: KripkeModel) -> None:
    """Raise :class:`ModelError` listing the violations of ``m``, if any."""
    violations = validate_model(m)
    if violations:
        LOGGER.debug("Model rejected with %d violations", len(violations))
        summary = "; ".join(str(v) for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
        raise ModelError(f"Malformed model: {summary}{more}")
