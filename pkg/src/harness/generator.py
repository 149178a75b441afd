"""Seeded random formula generators."""

import zlib
from typing import Optional, Tuple

import numpy as np

from src.formula import (
    BOT,
    And,
    Atom,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Var,
    neg,
)
from src.harness.config import GenConfig


def rng_for(seed: int, name: str = "") -> np.random.Generator:
    """Generator for one consumer, derived from ``(seed, crc32(name))``.

    Args:
        seed: Run seed
        name: Consumer name, such as a check name

    Returns:
        Independent numpy generator
    """
    return np.random.default_rng([seed, zlib.crc32(name.encode("utf-8"))])


def _choose(rng: np.random.Generator, options: Tuple[str, ...], weights: Tuple[float, ...]) -> str:
    total = sum(weights)
    return options[int(rng.choice(len(options), p=[w / total for w in weights]))]


def _leaf(rng: np.random.Generator, cfg: GenConfig, bound: Tuple[str, ...]) -> Formula:
    # one slot per atom plus one for bot
    pick = int(rng.integers(cfg.atom_count + 1))
    if pick == cfg.atom_count:
        return BOT
    name = cfg.atom_names[pick]
    if bound and rng.random() < 0.75:
        return Atom(name, (Var(bound[int(rng.integers(len(bound)))]),))
    return Atom(name)


def _gen(rng: np.random.Generator, cfg: GenConfig, depth: int, bound: Tuple[str, ...]) -> Formula:
    if depth == 0 or rng.random() < cfg.leaf_probability:
        return _leaf(rng, cfg, bound)

    names, weights = zip(*[(c, w) for c, w in cfg.active_weights() if w > 0])
    connective = _choose(rng, names, weights)
    if connective in ("forall", "exists"):
        var = f"x{len(bound)}"
        body = _gen(rng, cfg, depth - 1, bound + (var,))
        return Forall(var, body) if connective == "forall" else Exists(var, body)

    lhs = _gen(rng, cfg, depth - 1, bound)
    rhs = _gen(rng, cfg, depth - 1, bound)
    if connective == "and":
        return And(lhs, rhs)
    if connective == "or":
        return Or(lhs, rhs)
    return Imp(lhs, rhs)


def gen_formula(cfg: GenConfig, rng: Optional[np.random.Generator] = None) -> Formula:
    """Random formula of depth at most ``cfg.max_depth``.

    Atoms are ``P0, P1, ...`` (after ``cfg.atom_prefix``). Without
    quantifiers the result is propositional; with them, atoms under a
    binder are usually applied to a bound variable, so results are closed.

    Args:
        cfg: Generation settings
        rng: Generator to draw from; defaults to one seeded by ``cfg.seed``

    Returns:
        Random formula
    """
    if rng is None:
        rng = rng_for(cfg.seed)
    return _gen(rng, cfg, cfg.max_depth, ())


def _gen_nf(rng: np.random.Generator, cfg: GenConfig, depth: int, bound: Tuple[str, ...]) -> Formula:
    if depth == 0 or rng.random() < cfg.leaf_probability:
        leaf = _leaf(rng, cfg, bound)
        return leaf if leaf is BOT else neg(leaf)

    options = ("and", "imp", "forall") if cfg.allow_quantifiers else ("and", "imp")
    connective = options[int(rng.integers(len(options)))]
    if connective == "forall":
        var = f"x{len(bound)}"
        return Forall(var, _gen_nf(rng, cfg, depth - 1, bound + (var,)))
    lhs = _gen_nf(rng, cfg, depth - 1, bound)
    rhs = _gen_nf(rng, cfg, depth - 1, bound)
    return And(lhs, rhs) if connective == "and" else Imp(lhs, rhs)


def gen_nf_formula(cfg: GenConfig, rng: Optional[np.random.Generator] = None) -> Formula:
    """Random formula of the negative fragment: ``bot``, ``~P``, ``&``, ``->`` and ``forall``.

    A negated leaf adds one level over ``cfg.max_depth``.
    """
    if rng is None:
        rng = rng_for(cfg.seed, "nf")
    return _gen_nf(rng, cfg, cfg.max_depth, ())


def gen_propositional_param(rng: np.random.Generator, atom_count: int = 2, max_depth: int = 2) -> Formula:
    """Small closed propositional formula over ``Q0, Q1, ...``, used as a parameter F."""
    cfg = GenConfig(atom_count=atom_count, max_depth=max_depth, atom_prefix="Q", samples=1)
    return _gen(rng, cfg, max_depth, ())
