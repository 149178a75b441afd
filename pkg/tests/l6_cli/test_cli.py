"""
L6 CLI: Command Line Tests

Tests subcommand output and exit codes through ``main(argv)``.
"""

import json

import pytest


def test_translate(capsys):
    """Test that translate prints the canonical image."""
    from src.cli import main

    assert main(["translate", "--kind", "g", "P | ~P"]) == 0
    assert capsys.readouterr().out.strip() == "~(~~~P & ~~~~P)"


def test_translate_with_parameter(capsys):
    """Test a parameterised translation with JSON output."""
    from src.cli import main

    assert main(["translate", "--kind", "fd", "--param-f", "Q", "--json", "~P"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"kind": "fd[Q]", "input": "~P", "output": "P | Q -> Q"}


def test_missing_parameter_is_an_error(capsys):
    """Test that n1 without F exits with the error code."""
    from src.cli import main

    assert main(["translate", "--kind", "n1", "P"]) == 2
    assert "requires a parameter" in capsys.readouterr().err


def test_syntax_error(capsys):
    """Test that malformed formulas exit with code 2 and a position."""
    from src.cli import main

    assert main(["parse", "P & & Q"]) == 2
    assert "syntax error at line 1" in capsys.readouterr().err


def test_parse_json(capsys):
    """Test the parse summary."""
    from src.cli import main

    assert main(["parse", "--json", "~P & Q"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["formula"] == "~P & Q"
    assert payload["atoms"] == ["P", "Q"]
    assert payload["nf"] is False


def test_prove_verdicts(capsys):
    """Test provable and unprovable exit codes."""
    from src.cli import main

    assert main(["prove", "--logic", "ipc", "~~(P | ~P)"]) == 0
    assert capsys.readouterr().out.strip() == "provable"

    assert main(["prove", "--logic", "ipc", "--json", "--countermodel", "P | ~P"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "unprovable"
    assert payload["countermodel"]["kind"] == "finite"
    assert payload["countermodel"]["root"] == 0


def test_prove_rejects_quantifiers(capsys):
    """Test that deciders refuse first-order input on the command line."""
    from src.cli import main

    assert main(["prove", "--logic", "cpc", "forall x. P(x)"]) == 2
    capsys.readouterr()


def test_equiv(capsys):
    """Test the equivalence subcommand."""
    from src.cli import main

    assert main(["equiv", "--logic", "ipc", "~~~P", "~P"]) == 0
    assert capsys.readouterr().out.strip() == "equivalent"
    assert main(["equiv", "--logic", "ipc", "~~P", "P"]) == 1
    assert capsys.readouterr().out.strip() == "not equivalent"


def test_classify(capsys):
    """Test the scale subcommand."""
    from src.cli import main

    assert main(["classify", "P | ~P"]) == 0
    assert capsys.readouterr().out.strip() == "provable-not-strongly"


def test_chain_threshold(capsys):
    """Test thresholds on the chain preset, including infinity."""
    from src.cli import main
    from tests.fixtures import UNBOUNDED_F

    assert main(["kripke", "threshold", "--preset", "chain", UNBOUNDED_F]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["kripke", "threshold", "--preset", "chain", "forall x. P(x)"]) == 0
    assert capsys.readouterr().out.strip() == "inf"


def test_threshold_needs_chain(capsys):
    """Test that thresholds are refused on other models."""
    from src.cli import main

    assert main(["kripke", "threshold", "--preset", "single", "P(0)"]) == 2
    assert "chain models only" in capsys.readouterr().err


def test_eval_separating_formula(capsys):
    """Test that the grafted root does not force the separating formula."""
    from src.cli import main
    from src.kripke import separating_formula

    assert main(["kripke", "eval", "--preset", "grafted", str(separating_formula())]) == 1
    assert capsys.readouterr().out.strip() == "not forced"


def test_eval_model_file(tmp_path, capsys):
    """Test evaluation in a model read from disk, at a chosen node."""
    from src.cli import main
    from tests.fixtures import two_node_model_dict, write_model

    path = write_model(tmp_path / "m.json", two_node_model_dict())

    assert main(["kripke", "eval", "--model", str(path), "P | ~P"]) == 1
    assert main(["kripke", "eval", "--model", str(path), "--node", "1", "P | ~P"]) == 0
    capsys.readouterr()


def test_formula_from_file(tmp_path, capsys):
    """Test the @file form of formula arguments."""
    from src.cli import main

    path = tmp_path / "f.txt"
    path.write_text("P -> P\n")

    assert main(["prove", "--logic", "mpc", f"@{path}"]) == 0
    capsys.readouterr()


def test_missing_file(capsys):
    """Test that unreadable inputs are reported as errors."""
    from src.cli import main

    assert main(["kripke", "eval", "--model", "/nonexistent/model.json", "P"]) == 2
    assert "negtrans: error" in capsys.readouterr().err


def test_suite_list(capsys):
    """Test that every registered check is listed."""
    from src.cli import main
    from src.harness import check_names

    assert main(["suite", "list"]) == 0
    out = capsys.readouterr().out
    assert all(name in out for name in check_names())


def test_suite_run_single_check(capsys):
    """Test a suite run restricted to one deterministic check."""
    from src.cli import main

    assert main(["suite", "run", "--check", "kripke-certificates", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["seed"] == 0
    assert [c["name"] for c in payload["checks"]] == ["kripke-certificates"]
    assert payload["checks"][0]["status"] == "pass"


def test_suite_run_table(capsys):
    """Test the table output of a suite run."""
    from src.cli import main

    assert main(["suite", "run", "--seed", "3", "--check", "non-strengthening-witnesses"]) == 0
    out = capsys.readouterr().out
    assert "non-strengthening-witnesses" in out
    assert out.strip().endswith("PASS (seed 3)")


@pytest.mark.parametrize(
    "argv",
    [[], ["prove", "P"], ["prove", "--logic", "s4", "P"], ["kripke", "eval", "P"], ["suite", "run", "--check"]],
)
def test_usage_errors(argv, capsys):
    """Test that argparse usage errors map to exit code 2."""
    from src.cli import main

    assert main(argv) == 2
    capsys.readouterr()


def test_unknown_check_is_usage_error(capsys):
    """Test that an unknown check name is reported, not raised."""
    from src.cli import main

    assert main(["suite", "run", "--check", "nope"]) == 2
    assert "Unknown checks" in capsys.readouterr().err


def test_alternative_preset_names(capsys):
    """Test that fig3, fig4 and fig5 name the chain, single and grafted presets."""
    from src.cli import main
    from src.kripke import separating_formula
    from tests.fixtures import UNBOUNDED_F

    assert main(["kripke", "threshold", "--preset", "fig3", UNBOUNDED_F]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["kripke", "eval", "--preset", "fig4", f"~({UNBOUNDED_F})"]) == 0
    assert capsys.readouterr().out.strip() == "forced"
    assert main(["kripke", "eval", "--preset", "fig5", str(separating_formula())]) == 1
    assert capsys.readouterr().out.strip() == "not forced"


def test_alternative_check_name(capsys):
    """Test that a check alias runs the registered check."""
    from src.cli import main

    assert main(["suite", "run", "--check", "paper-certificates", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [c["name"] for c in payload["checks"]] == ["kripke-certificates"]


def test_suite_list_shows_aliases(capsys):
    """Test that listed checks carry their alternative names."""
    from src.cli import main

    assert main(["suite", "list", "--json"]) == 0
    rows = {row["name"]: row["aliases"] for row in json.loads(capsys.readouterr().out)}
    assert rows["kripke-certificates"] == ["paper-certificates"]
    assert rows["g-into-nf"] == []


def test_negative_chain_node_is_an_input_error(capsys):
    """Test that a node below zero exits with the error code, not the negative verdict."""
    from src.cli import main

    assert main(["kripke", "eval", "--preset", "chain", "--node", "-1", "bot"]) == 2
    assert "negtrans: error" in capsys.readouterr().err


def test_undecodable_formula_file(tmp_path, capsys):
    """Test that a formula file that is not UTF-8 exits with the error code."""
    from src.cli import main

    path = tmp_path / "bad.txt"
    path.write_bytes(b"\xff\xfe")

    assert main(["prove", "--logic", "ipc", f"@{path}"]) == 2
    assert "negtrans: error" in capsys.readouterr().err


def test_undecodable_model_file(tmp_path, capsys):
    """Test that a model file that is not UTF-8 exits with the error code."""
    from src.cli import main

    path = tmp_path / "bad.json"
    path.write_bytes(b"\xff\xfe{}")

    assert main(["kripke", "eval", "--model", str(path), "P"]) == 2
    assert "negtrans: error" in capsys.readouterr().err
