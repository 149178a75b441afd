"""JSON model descriptions.

Finite::

    {"kind": "finite", "nodes": [0, 1], "edges": [[0, 1]], "root": 0,
     "domains": {"0": [0], "1": [0, 1]},
     "atoms": [{"node": 1, "pred": "P", "args": [0]}]}

Chain::

    {"kind": "chain", "unary": {"P": 1}, "nullary": {"Q": "inf"}}

Grafted::

    {"kind": "grafted", "root_domain": [0],
     "root_atoms": [{"pred": "R", "args": []}], "children": [ ... ]}
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

from src.errors import ModelError
from src.kripke.models import (
    INF,
    FiniteModel,
    GraftedModel,
    KripkeModel,
    OmegaChainModel,
    Threshold,
)

LOGGER = logging.getLogger(__name__)


def _threshold_from_json(value: Any, where: str) -> Threshold:
    if value == "inf" or value is None:
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ModelError(f"{where}: threshold must be a natural or \"inf\", got {value!r}")
    return value


def _threshold_to_json(value: Threshold) -> Union[int, str]:
    return "inf" if value == INF else int(value)


def _int_list(value: Any, where: str) -> List[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise ModelError(f"{where}: expected a list of integers, got {value!r}")
    return list(value)


def _require(data: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in data:
        raise ModelError(f"{where}: missing field '{key}'")
    return data[key]


def _load_finite(data: Mapping[str, Any]) -> FiniteModel:
    nodes = _int_list(_require(data, "nodes", "finite model"), "nodes")
    edges = _require(data, "edges", "finite model")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 for e in edges
    ):
        raise ModelError("edges: expected a list of [lower, upper] pairs")
    raw_domains = _require(data, "domains", "finite model")
    if not isinstance(raw_domains, dict):
        raise ModelError("domains: expected an object keyed by node id")
    try:
        domains = {int(k): _int_list(v, f"domain of {k}") for k, v in raw_domains.items()}
    except ValueError:
        raise ModelError("domains: keys must be node ids")
    atoms = []
    for entry in data.get("atoms", []):
        if not isinstance(entry, dict):
            raise ModelError(f"atoms: expected objects, got {entry!r}")
        atoms.append(
            (
                _require(entry, "node", "atom"),
                _require(entry, "pred", "atom"),
                tuple(_int_list(entry.get("args", []), "atom args")),
            )
        )
    return FiniteModel.build(
        nodes=nodes,
        edges=[(a, b) for a, b in edges],
        root=_require(data, "root", "finite model"),
        domains=domains,
        atoms=atoms,
    )


def _load_chain(data: Mapping[str, Any]) -> OmegaChainModel:
    unary = data.get("unary", {})
    nullary = data.get("nullary", {})
    if not isinstance(unary, dict) or not isinstance(nullary, dict):
        raise ModelError("chain model: 'unary' and 'nullary' must be objects")
    return OmegaChainModel(
        unary=dict(unary),
        nullary={p: _threshold_from_json(t, f"nullary '{p}'") for p, t in nullary.items()},
    )


def _load_grafted(data: Mapping[str, Any]) -> GraftedModel:
    children = _require(data, "children", "grafted model")
    if not isinstance(children, list):
        raise ModelError("children: expected a list of models")
    loaded = []
    for child in children:
        model = load_model(child)
        if isinstance(model, GraftedModel):
            raise ModelError("children: a grafted model cannot be a child")
        loaded.append(model)
    root_atoms = []
    for entry in data.get("root_atoms", []):
        if not isinstance(entry, dict):
            raise ModelError(f"root_atoms: expected objects, got {entry!r}")
        root_atoms.append(
            (_require(entry, "pred", "root atom"), tuple(_int_list(entry.get("args", []), "root atom args")))
        )
    return GraftedModel(
        root_domain=frozenset(_int_list(_require(data, "root_domain", "grafted model"), "root_domain")),
        root_atoms=frozenset(root_atoms),
        children=tuple(loaded),
    )


_LOADERS = {
    "finite": _load_finite,
    "chain": _load_chain,
    "grafted": _load_grafted,
}


def load_model(data: Mapping[str, Any]) -> KripkeModel:
    """Build a model from its JSON description.

    Raises:
        ModelError: On a missing or ill-typed field or an unknown kind
    """
    if not isinstance(data, dict):
        raise ModelError(f"Model description must be an object, got {type(data).__name__}")
    kind = data.get("kind")
    loader = _LOADERS.get(kind)
    if loader is None:
        raise ModelError(f"Unknown model kind {kind!r} (choose from {', '.join(_LOADERS)})")
    return loader(data)


def load_model_file(path: Union[str, Path]) -> KripkeModel:
    """Read and build a model from a JSON file."""
    path = Path(path)
    LOGGER.info("Loading model from %s", path)
    with path.open(encoding="utf-8") as fh:
        return load_model(json.load(fh))


def _covering_pairs(m: FiniteModel) -> List[List[int]]:
    strict = {(a, b) for a, b in m.order if a != b}
    return sorted(
        [a, b]
        for a, b in strict
        if not any((a, c) in strict and (c, b) in strict for c in m.nodes)
    )


def model_to_dict(m: KripkeModel) -> Dict[str, Any]:
    """JSON description of ``m``; finite orders are written as their covering pairs."""
    if isinstance(m, FiniteModel):
        return {
            "kind": "finite",
            "nodes": sorted(m.nodes),
            "edges": _covering_pairs(m),
            "root": m.root,
            "domains": {str(n): sorted(m.domain(n)) for n in sorted(m.nodes)},
            "atoms": [
                {"node": n, "pred": p, "args": list(args)} for n, p, args in sorted(m.atoms)
            ],
        }
    if isinstance(m, OmegaChainModel):
        return {
            "kind": "chain",
            "unary": dict(sorted(m.unary.items())),
            "nullary": {p: _threshold_to_json(t) for p, t in sorted(m.nullary.items())},
        }
    if isinstance(m, GraftedModel):
        return {
            "kind": "grafted",
            "root_domain": sorted(m.root_domain),
            "root_atoms": [{"pred": p, "args": list(args)} for p, args in sorted(m.root_atoms)],
            "children": [model_to_dict(c) for c in m.children],
        }
    raise TypeError(f"Not a Kripke model: {m!r}")
