"""Golden test fixtures for deterministic testing."""

import json
from pathlib import Path

FIXTURES_DIR = Path(__file__).parent

# Classically refutable (CPC proves its negation), yet forced at every node of the chain.
UNBOUNDED_F = "~(forall x. P(x)) & (forall x. ~~P(x))"


def get_golden_translations():
    """(kind, parameter, input, expected output) rows, outputs in canonical print form."""
    return [
        ("g", None, "P | ~P", "~(~~~P & ~~~~P)"),
        ("ko", None, "P | ~P", "~~(~~P | ~~~~~P)"),
        ("ku", None, "P | ~P", "~~(P | ~P)"),
        ("kr", None, "P | ~P", "~(~P & (~~P & ~bot))"),
        ("goedel", None, "P | ~P", "~(~~~P & ~~(~~P & ~bot))"),
        ("ku", None, "forall x. P(x)", "~~forall x. ~~P(x)"),
        ("g", None, "exists x. P(x)", "~forall x. ~~~P(x)"),
        ("kr", None, "forall x. P(x)", "~exists x. ~P(x)"),
        ("kr", None, "bot", "~~bot"),
        ("n1", "Q", "P", "~~P | Q"),
        ("n2", "Q", "P", "(P -> Q) -> Q"),
        ("fd", "Q", "P", "P | Q"),
        ("fd", "Q", "~P", "P | Q -> Q"),
        ("rfd", "Q", "~P", "P -> Q"),
    ]


def get_golden_decisions():
    """(logic, formula, provable) rows for the deciders."""
    return [
        ("cpc", "P | ~P", True),
        ("ipc", "P | ~P", False),
        ("ipc", "~~(P | ~P)", True),
        ("mpc", "~~bot -> bot", True),
        ("mpc", "bot -> P", False),
        ("ipc", "bot -> P", True),
        ("cpc", "((P -> Q) -> P) -> P", True),
        ("ipc", "((P -> Q) -> P) -> P", False),
        ("ipc", "~~~P <-> ~P", True),
        ("ipc", "(P -> Q) | (Q -> P)", False),
        ("ipc", "(P & Q -> R) <-> (P -> Q -> R)", True),
        ("mpc", "~(P & ~P)", True),
        ("mpc", "~~(P | ~P)", True),
    ]


def get_golden_scale():
    """(formula, scale class) rows."""
    return [
        ("P | ~P", "provable-not-strongly"),
        ("bot", "strongly-refutable"),
        ("P", "undecidable"),
        ("P -> P", "strongly-provable"),
        ("~~(P | ~P)", "strongly-provable"),
        ("~(P | ~P)", "strongly-refutable"),
        ("~~P -> P", "provable-not-strongly"),
    ]


def get_golden_chain_thresholds():
    """(formula, threshold) rows on the chain preset (P of offset 1)."""
    return [
        (UNBOUNDED_F, 0),
        (f"~({UNBOUNDED_F})", "inf"),
        ("P(3)", 4),
        ("P(0)", 1),
        ("exists x. P(x)", 1),
        ("forall x. P(x)", "inf"),
        ("forall x. ~~P(x)", 0),
        ("~forall x. P(x)", 0),
        ("bot", "inf"),
        ("~bot", 0),
    ]


def two_node_model_dict():
    """Root 0 below 1, P forced only at 1."""
    return {
        "kind": "finite",
        "nodes": [0, 1],
        "edges": [[0, 1]],
        "root": 0,
        "domains": {"0": [0], "1": [0]},
        "atoms": [{"node": 1, "pred": "P", "args": []}],
    }


def write_model(path: Path, data) -> Path:
    """Write a model description as JSON and return the path."""
    path.write_text(json.dumps(data))
    return path
