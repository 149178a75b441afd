"""Forcing on the omega-chain through threshold arithmetic.

Every closed formula is forced from some node on (its threshold) or never.
A formula with one free variable ``x`` has a threshold for each element
``d``; that function of ``d`` is eventually constant or eventually ``d + b``,
so it is stored as a finite prefix plus a tail.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from src.errors import ModelError, UnsupportedFormulaError
from src.formula import (
    And,
    Atom,
    Bot,
    Elem,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    Var,
    free_vars,
    has_quantifiers,
)
from src.kripke.models import INF, OmegaChainModel, Threshold, is_threshold

LOGGER = logging.getLogger(__name__)


def implication_threshold(ta: Threshold, tb: Threshold) -> Threshold:
    """Threshold of ``A -> B`` from those of ``A`` and ``B``."""
    return 0 if ta >= tb else tb


@dataclass(frozen=True)
class ThresholdFn:
    """Threshold as a function of one domain element ``d``.

    ``prefix[d]`` for ``d < len(prefix)``; beyond that ``offset`` when
    ``slope`` is 0 and ``d + offset`` when ``slope`` is 1.
    """

    prefix: Tuple[Threshold, ...] = ()
    slope: int = 0
    offset: Threshold = 0

    def __post_init__(self):
        """Validate fields after initialization."""
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if self.slope not in (0, 1):
            raise ValueError("slope must be 0 or 1")
        if any(not is_threshold(t) for t in self.prefix):
            raise ValueError("prefix entries must be naturals or inf")
        if self.slope == 0 and not is_threshold(self.offset):
            raise ValueError("constant tail must be a natural or inf")
        if self.slope == 1:
            if self.offset == INF or isinstance(self.offset, float):
                raise ValueError("linear tail needs an integer offset")
            if len(self.prefix) + self.offset < 0:
                raise ValueError("linear tail would go negative")

    @classmethod
    def constant(cls, t: Threshold) -> "ThresholdFn":
        return cls((), 0, t)

    @classmethod
    def linear(cls, b: int) -> "ThresholdFn":
        return cls((), 1, b)

    def tail_at(self, d: int) -> Threshold:
        return d + self.offset if self.slope == 1 else self.offset

    def at(self, d: int) -> Threshold:
        if d < len(self.prefix):
            return self.prefix[d]
        return self.tail_at(d)

    def trimmed(self) -> "ThresholdFn":
        """Drop trailing prefix entries the tail already produces."""
        prefix = list(self.prefix)
        while prefix and prefix[-1] == self.tail_at(len(prefix) - 1):
            prefix.pop()
        if len(prefix) == len(self.prefix):
            return self
        return ThresholdFn(tuple(prefix), self.slope, self.offset)

    def __str__(self) -> str:
        tail = f"d+{self.offset}" if self.slope == 1 else _fmt(self.offset)
        if not self.prefix:
            return tail
        return "[" + ", ".join(_fmt(t) for t in self.prefix) + f"] then {tail}"


def _fmt(t: Threshold) -> str:
    return "inf" if t == INF else str(int(t))


def _pointwise(
    f: ThresholdFn, g: ThresholdFn, op: Callable[[Threshold, Threshold], Threshold]
) -> ThresholdFn:
    # Past the cutoff both sides are in their tails and every comparison
    # between them has settled.
    cut = max(len(f.prefix), len(g.prefix))
    if f.offset != INF and g.offset != INF:
        cut += int(abs(f.offset - g.offset)) + 1
    prefix = tuple(op(f.at(d), g.at(d)) for d in range(cut))
    first, second = op(f.at(cut), g.at(cut)), op(f.at(cut + 1), g.at(cut + 1))
    if first == second:
        return ThresholdFn(prefix, 0, first).trimmed()
    return ThresholdFn(prefix, 1, int(first) - cut).trimmed()


def exists_threshold(fn: ThresholdFn) -> Threshold:
    """Threshold of ``exists x. A`` given that of ``A`` as a function of ``x``.

    Node ``k`` forces it iff some ``d <= k`` has ``k >= t(d)``, so the answer
    is the least ``max(d, t(d))``.
    """
    c = len(fn.prefix)
    best: Threshold = min((max(d, t) for d, t in enumerate(fn.prefix)), default=INF)
    if fn.slope == 0:
        tail: Threshold = max(c, fn.offset)
    else:
        tail = c + max(0, int(fn.offset))
    return min(best, tail)


def forall_threshold(fn: ThresholdFn) -> Threshold:
    """Threshold of ``forall x. A`` given that of ``A`` as a function of ``x``.

    Node ``k`` forces it iff every later node ``k'`` has ``k' >= t(d)`` for
    all ``d <= k'``; the result is the least ``k`` past which that holds.
    """
    c = len(fn.prefix)
    if any(t == INF for t in fn.prefix):
        return INF
    prefix_max = max(fn.prefix, default=0)
    if fn.slope == 0:
        if fn.offset == INF:
            return INF
        stable = max(c, prefix_max, int(fn.offset))
    else:
        if fn.offset > 0:
            return INF
        stable = max(c, prefix_max)

    last_failure = -1
    running = 0
    for k in range(stable):
        running = max(running, fn.at(k))
        if k < running:
            last_failure = k
    return last_failure + 1


def _atom_fn(m: OmegaChainModel, f: Atom, var: Optional[str]) -> ThresholdFn:
    if f.pred in m.nullary:
        if f.args:
            raise UnsupportedFormulaError(f"'{f.pred}' is nullary in the model but applied in {f}")
        return ThresholdFn.constant(m.nullary[f.pred])
    if f.pred in m.unary:
        if len(f.args) != 1:
            raise UnsupportedFormulaError(f"'{f.pred}' is unary in the model but used as {f}")
        offset = m.unary[f.pred]
        term = f.args[0]
        if isinstance(term, Elem):
            return ThresholdFn.constant(term.value + offset)
        if isinstance(term, Var) and term.name == var:
            return ThresholdFn.linear(offset)
        raise UnsupportedFormulaError(f"Free variable {term} in {f}")
    raise UnsupportedFormulaError(f"Predicate '{f.pred}' is not declared in the chain model")


def chain_threshold_fn(m: OmegaChainModel, a: Formula, var: Optional[str] = None) -> ThresholdFn:
    """Threshold of ``a`` as a function of its only free variable ``var``.

    Args:
        m: Chain model
        a: Formula whose free variables are among ``{var}``
        var: Variable the result depends on, or None for closed formulas

    Returns:
        Threshold function (constant when ``var`` does not occur free)

    Raises:
        UnsupportedFormulaError: For undeclared predicates, other free
            variables, or a quantifier whose body depends on two variables
    """
    match a:
        case Bot():
            return ThresholdFn.constant(INF)
        case Atom():
            return _atom_fn(m, a, var)
        case And(b, c):
            return _pointwise(chain_threshold_fn(m, b, var), chain_threshold_fn(m, c, var), max)
        case Or(b, c):
            return _pointwise(chain_threshold_fn(m, b, var), chain_threshold_fn(m, c, var), min)
        case Imp(b, c):
            return _pointwise(
                chain_threshold_fn(m, b, var),
                chain_threshold_fn(m, c, var),
                implication_threshold,
            )
        case Forall(y, body) | Exists(y, body):
            fv = free_vars(body)
            if y not in fv:
                # vacuous binder over a non-empty domain
                return chain_threshold_fn(m, body, var)
            if var is not None and var != y and var in fv:
                raise UnsupportedFormulaError(
                    f"Quantifier over {y} in a body that also depends on {var}: {a}"
                )
            inner = chain_threshold_fn(m, body, y)
            eliminate = forall_threshold if isinstance(a, Forall) else exists_threshold
            return ThresholdFn.constant(eliminate(inner))
    raise TypeError(f"Not a formula: {a!r}")


def chain_threshold(m: OmegaChainModel, a: Formula) -> Threshold:
    """Least node forcing the closed formula ``a``, or ``inf`` if none does."""
    fv = free_vars(a)
    if fv:
        raise UnsupportedFormulaError(f"Formula has free variables {sorted(fv)}")
    result = chain_threshold_fn(m, a).at(0)
    LOGGER.debug("chain threshold of %s is %s", a, _fmt(result))
    return result


def chain_forces(m: OmegaChainModel, node: int, a: Formula) -> bool:
    """Whether ``node`` forces the closed formula ``a``."""
    if node < 0:
        raise ModelError(f"Chain nodes are naturals, got {node}")
    return node >= chain_threshold(m, a)


def chain_forces_bruteforce(m: OmegaChainModel, a: Formula, node: int) -> bool:
    """Forcing by direct recursion over the nodes, for propositional inputs.

    Above the largest finite nullary threshold ``T`` every node forces the
    same formulas, so the chain is cut at ``T``.
    """
    if has_quantifiers(a):
        raise UnsupportedFormulaError("The brute-force oracle takes no quantifiers")
    top = max((int(t) for t in m.nullary.values() if t != INF), default=0)
    memo: Dict[Tuple[Formula, int], bool] = {}

    def force(f: Formula, k: int) -> bool:
        k = min(k, top)
        key = (f, k)
        if key in memo:
            return memo[key]
        match f:
            case Bot():
                result = False
            case Atom(pred, args):
                if args or pred not in m.nullary:
                    raise UnsupportedFormulaError(f"The brute-force oracle needs nullary atoms, got {f}")
                result = m.nullary[pred] <= k
            case And(b, c):
                result = force(b, k) and force(c, k)
            case Or(b, c):
                result = force(b, k) or force(c, k)
            case Imp(b, c):
                result = all(not force(b, j) or force(c, j) for j in range(k, top + 1))
            case _:
                raise TypeError(f"Not a formula: {f!r}")
        memo[key] = result
        return result

    return force(a, node)


__all__ = [
    "ThresholdFn",
    "chain_forces",
    "chain_forces_bruteforce",
    "chain_threshold",
    "chain_threshold_fn",
    "exists_threshold",
    "forall_threshold",
    "implication_threshold",
]
