"""
L4 Kripke: Omega-Chain Tests

Tests the threshold calculus on the infinite chain against hand-computed
values and a node-by-node oracle.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tests.fixtures import get_golden_chain_thresholds


@pytest.mark.parametrize("text, expected", get_golden_chain_thresholds())
def test_golden_thresholds(text, expected):
    """Test thresholds on the chain preset."""
    from src.formula import parse
    from src.kripke import INF, chain_model, chain_threshold

    want = INF if expected == "inf" else expected
    assert chain_threshold(chain_model(), parse(text)) == want


def test_unbounded_predicate_formula_forced_everywhere():
    """Test that the classically refutable formula holds at every node."""
    from src.kripke import chain_forces, chain_model, unbounded_predicate_formula

    f = unbounded_predicate_formula()
    assert all(chain_forces(chain_model(), k, f) for k in range(10))


def test_implication_threshold():
    """Test the implication rule on thresholds."""
    from src.kripke import INF, implication_threshold

    assert implication_threshold(3, 1) == 0
    assert implication_threshold(1, 3) == 3
    assert implication_threshold(0, INF) == INF
    assert implication_threshold(INF, INF) == 0


def test_threshold_fn_evaluation():
    """Test prefix, tail and rendering of threshold functions."""
    from src.kripke import INF, ThresholdFn

    fn = ThresholdFn((4, INF), 1, 2)

    assert fn.at(0) == 4
    assert fn.at(1) == INF
    assert fn.at(5) == 7
    assert str(fn) == "[4, inf] then d+2"
    assert str(ThresholdFn.constant(INF)) == "inf"
    assert ThresholdFn((3, 3), 0, 3).trimmed() == ThresholdFn.constant(3)


def test_threshold_fn_validation():
    """Test that malformed threshold functions are refused."""
    from src.kripke import INF, ThresholdFn

    with pytest.raises(ValueError):
        ThresholdFn((), 2, 0)
    with pytest.raises(ValueError):
        ThresholdFn((), 1, INF)
    with pytest.raises(ValueError):
        ThresholdFn((-1,), 0, 0)


def test_exists_threshold():
    """Test the least witness over prefix and tail."""
    from src.kripke import INF, ThresholdFn, exists_threshold

    assert exists_threshold(ThresholdFn((5, 0), 0, 3)) == 1
    assert exists_threshold(ThresholdFn.linear(1)) == 1
    assert exists_threshold(ThresholdFn.constant(INF)) == INF


def test_forall_threshold():
    """Test universal thresholds, including the unbounded case."""
    from src.kripke import INF, ThresholdFn, forall_threshold

    assert forall_threshold(ThresholdFn((0, 3), 0, 1)) == 3
    assert forall_threshold(ThresholdFn.linear(1)) == INF
    assert forall_threshold(ThresholdFn.linear(0)) == 0
    assert forall_threshold(ThresholdFn.constant(2)) == 2


def test_two_variable_nesting_unsupported():
    """Test that a quantifier whose body mentions an outer variable is refused."""
    from src.errors import UnsupportedFormulaError
    from src.formula import parse
    from src.kripke import chain_model, chain_threshold

    with pytest.raises(UnsupportedFormulaError):
        chain_threshold(chain_model(), parse("forall x. exists y. P(x) & P(y)"))


@pytest.mark.parametrize("text", ["R", "P", "P(x)", "Q(0)"])
def test_uninterpretable_formulas(text):
    """Test undeclared predicates, wrong arity and free variables."""
    from src.errors import UnsupportedFormulaError
    from src.formula import parse
    from src.kripke import OmegaChainModel, chain_threshold

    with pytest.raises(UnsupportedFormulaError):
        chain_threshold(OmegaChainModel(unary={"P": 1}, nullary={"Q": 2}), parse(text))


def test_vacuous_binder_passes_through():
    """Test that a binder not used by its body changes nothing."""
    from src.formula import parse
    from src.kripke import OmegaChainModel, chain_threshold

    m = OmegaChainModel(nullary={"Q": 2})
    assert chain_threshold(m, parse("forall x. Q")) == 2


def test_chain_model_validation():
    """Test declared offsets and thresholds."""
    from src.errors import ModelError
    from src.kripke import OmegaChainModel

    with pytest.raises(ModelError):
        OmegaChainModel(unary={"P": 0})
    with pytest.raises(ModelError):
        OmegaChainModel(nullary={"Q": -1})
    with pytest.raises(ModelError):
        OmegaChainModel(unary={"P": 1}, nullary={"P": 1})


def test_negative_chain_node():
    """Test that nodes below zero are a model error."""
    from src.errors import ModelError
    from src.formula import BOT
    from src.kripke import chain_forces, chain_model

    with pytest.raises(ModelError, match="naturals"):
        chain_forces(chain_model(), -1, BOT)


def test_bruteforce_rejects_quantifiers():
    """Test the oracle's input restriction."""
    from src.errors import UnsupportedFormulaError
    from src.formula import parse
    from src.kripke import chain_forces_bruteforce, chain_model

    with pytest.raises(UnsupportedFormulaError):
        chain_forces_bruteforce(chain_model(), parse("forall x. P(x)"), 0)


thresholds = st.one_of(st.integers(min_value=0, max_value=4), st.just(float("inf")))


@given(
    st.fixed_dictionaries({"A": thresholds, "B": thresholds, "C": thresholds}),
    st.integers(min_value=0, max_value=6),
    st.data(),
)
def test_threshold_agrees_with_bruteforce(nullary, node, data):
    """Test the threshold calculus against direct recursion over nodes."""
    from src.formula import BOT, And, Atom, Imp, Or
    from src.kripke import OmegaChainModel, chain_forces, chain_forces_bruteforce

    leaves = st.one_of(st.just(BOT), st.sampled_from(["A", "B", "C"]).map(Atom))
    formulas = st.recursive(
        leaves,
        lambda c: st.one_of(st.builds(And, c, c), st.builds(Or, c, c), st.builds(Imp, c, c)),
        max_leaves=8,
    )
    f = data.draw(formulas)
    m = OmegaChainModel(nullary=nullary)

    assert chain_forces(m, node, f) == chain_forces_bruteforce(m, f, node)
