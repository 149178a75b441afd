"""
L4 Kripke: Finite Model Tests

Tests forcing in finite rooted models and the well-formedness checks.
"""

import pytest


def _two_node():
    from src.kripke import load_model
    from tests.fixtures import two_node_model_dict

    return load_model(two_node_model_dict())


def test_single_node_forcing():
    """Test that a one-node model behaves classically."""
    from src.formula import parse
    from src.kripke import forces_finite, single_node_model

    m = single_node_model()

    assert forces_finite(m, 0, parse("~bot"))
    assert forces_finite(m, 0, parse("P(0)"))
    assert forces_finite(m, 0, parse("forall x. P(x)"))
    assert forces_finite(m, 0, parse("exists x. P(x) | Q"))
    assert not forces_finite(m, 0, parse("bot"))


def test_excluded_middle_fails_on_two_nodes():
    """Test the classic two-node refutation of P | ~P."""
    from src.formula import parse
    from src.kripke import forces_finite, forcing_nodes

    m = _two_node()

    assert not forces_finite(m, 0, parse("P | ~P"))
    assert forces_finite(m, 0, parse("~~P"))
    assert forcing_nodes(m, parse("P | ~P")) == frozenset({1})


def test_forcing_is_monotone():
    """Test that forced formulas stay forced upwards."""
    from src.formula import parse
    from src.kripke import forcing_nodes

    m = _two_node()
    for text in ["P", "~P", "~~P", "P -> P", "~~P -> P"]:
        forced = forcing_nodes(m, parse(text))
        assert 0 not in forced or 1 in forced


def test_unknown_node_rejected():
    """Test that asking about a node outside the model raises ModelError."""
    from src.errors import ModelError
    from src.formula import parse
    from src.kripke import forces_finite, single_node_model

    with pytest.raises(ModelError, match="not in the model"):
        forces_finite(single_node_model(), 7, parse("P(0)"))


def test_free_variables_rejected():
    """Test that open formulas cannot be evaluated."""
    from src.errors import UnsupportedFormulaError
    from src.formula import parse
    from src.kripke import forces_finite, single_node_model

    with pytest.raises(UnsupportedFormulaError):
        forces_finite(single_node_model(), 0, parse("P(x)"))


def test_malformed_model_rejected():
    """Test that evaluation refuses a model violating monotonicity."""
    from src.errors import ModelError
    from src.formula import parse
    from src.kripke import FiniteModel, forces_finite

    m = FiniteModel.build([0, 1], [(0, 1)], 0, {0: {0}, 1: {0}}, atoms=[(0, "P", ())])

    with pytest.raises(ModelError, match="Malformed model"):
        forces_finite(m, 0, parse("P"))


@pytest.mark.parametrize(
    "kwargs, kind",
    [
        (dict(nodes=[0, 1], edges=[(0, 1)], root=0, domains={0: {0}, 1: {0}}, atoms=[(0, "P", ())]),
         "forcing-not-monotone"),
        (dict(nodes=[0, 1], edges=[], root=0, domains={0: {0}, 1: {0}}), "root-not-least"),
        (dict(nodes=[0], edges=[], root=0, domains={0: set()}), "empty-domain"),
        (dict(nodes=[0, 1], edges=[(0, 1)], root=0, domains={0: {0, 1}, 1: {0}}), "domain-not-monotone"),
        (dict(nodes=[0], edges=[], root=0, domains={0: {0}}, atoms=[(0, "P", (3,))]),
         "atom-argument-out-of-domain"),
    ],
)
def test_violations(kwargs, kind):
    """Test that each broken condition is reported under its own kind."""
    from src.kripke import FiniteModel, validate_model

    violations = validate_model(FiniteModel.build(**kwargs))

    assert kind in {v.kind for v in violations}


def test_raw_order_violations():
    """Test order conditions on a model built without closure."""
    from src.kripke import FiniteModel, validate_model

    m = FiniteModel(
        nodes=(0, 1, 2),
        order=frozenset({(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (1, 0)}),
        root=0,
        domains={0: {0}, 1: {0}, 2: {0}},
    )
    kinds = {v.kind for v in validate_model(m)}

    assert "order-not-transitive" in kinds
    assert "order-not-antisymmetric" in kinds


def test_closure_rejects_unknown_nodes():
    """Test that edges must mention declared nodes."""
    from src.errors import ModelError
    from src.kripke import reflexive_transitive_closure

    assert reflexive_transitive_closure([0, 1, 2], [(0, 1), (1, 2)]) >= {(0, 2), (2, 2)}
    with pytest.raises(ModelError):
        reflexive_transitive_closure([0, 1], [(0, 5)])


def test_evaluator_caches_per_formula():
    """Test that repeated queries reuse the computed node set."""
    from src.formula import parse
    from src.kripke import FiniteEvaluator

    evaluator = FiniteEvaluator(_two_node())
    f = parse("~~P")

    assert evaluator.nodes_forcing(f) is evaluator.nodes_forcing(f)
