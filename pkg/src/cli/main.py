"""negtrans command line.

Exit codes: 0 for yes/provable/forced/pass, 1 for the negative verdict,
2 for usage or input errors. Results go to stdout, diagnostics to stderr.
"""

import argparse
import json
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from src import __version__
from src.errors import ModelError
from src.formula import Formula, atoms, depth, free_vars, is_nf, parse, size
from src.harness import CHECK_ALIASES, CHECKS, SuiteConfig, run_suite
from src.kripke import (
    INF,
    PRESETS,
    FiniteModel,
    GraftedModel,
    KripkeModel,
    OmegaChainModel,
    chain_forces,
    chain_threshold,
    forces_finite,
    forces_grafted,
    load_model_file,
    model_to_dict,
    preset,
)
from src.prove import Decision, Logic, classify_scale, decide, equivalent
from src.telemetry import configure_logging
from src.translate import TranslationKind, translate

LOGGER = logging.getLogger(__name__)


class ExitCode(IntEnum):
    YES = 0
    NO = 1
    ERROR = 2


def _verdict(ok: bool) -> ExitCode:
    return ExitCode.YES if ok else ExitCode.NO


def read_formula(arg: str) -> Formula:
    """Parse a formula argument; ``@path`` reads the text from a file."""
    if arg.startswith("@"):
        return parse(Path(arg[1:]).read_text(encoding="utf-8"))
    return parse(arg)


def _emit(args: argparse.Namespace, text: str, payload: Dict[str, Any]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _fmt_threshold(t) -> str:
    return "inf" if t == INF else str(int(t))


def cmd_parse(args: argparse.Namespace) -> ExitCode:
    f = read_formula(args.formula)
    _emit(
        args,
        str(f),
        {
            "formula": str(f),
            "size": size(f),
            "depth": depth(f),
            "atoms": sorted(atoms(f)),
            "free_vars": sorted(free_vars(f)),
            "nf": is_nf(f),
        },
    )
    return ExitCode.YES


def cmd_translate(args: argparse.Namespace) -> ExitCode:
    param = read_formula(args.param_f) if args.param_f is not None else None
    kind = TranslationKind.parse(args.kind, param)
    a = read_formula(args.formula)
    image = translate(kind, a)
    _emit(args, str(image), {"kind": str(kind), "input": str(a), "output": str(image)})
    return ExitCode.YES


def _decision_payload(decision: Decision, include_model: bool) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "logic": decision.logic.value,
        "status": decision.status.value,
        "formula": str(decision.formula),
    }
    if include_model and decision.countermodel is not None:
        payload["countermodel"] = model_to_dict(decision.countermodel)
    if include_model and decision.valuation is not None:
        payload["valuation"] = decision.valuation
    return payload


def _report_decision(args: argparse.Namespace, decision: Decision, label: str) -> ExitCode:
    payload = _decision_payload(decision, args.countermodel)
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(label)
        if args.countermodel and decision.countermodel is not None:
            print(json.dumps(payload["countermodel"], indent=2))
        if args.countermodel and decision.valuation is not None:
            print(json.dumps(decision.valuation, sort_keys=True))
    return _verdict(decision.provable)


def cmd_prove(args: argparse.Namespace) -> ExitCode:
    decision = decide(Logic.parse(args.logic), read_formula(args.formula))
    return _report_decision(args, decision, decision.status.value)


def cmd_equiv(args: argparse.Namespace) -> ExitCode:
    decision = equivalent(
        Logic.parse(args.logic), read_formula(args.first), read_formula(args.second)
    )
    label = "equivalent" if decision.provable else "not equivalent"
    return _report_decision(args, decision, label)


def cmd_classify(args: argparse.Namespace) -> ExitCode:
    a = read_formula(args.formula)
    scale = classify_scale(a)
    _emit(args, scale.value, {"formula": str(a), "class": scale.value})
    return ExitCode.YES


def _load(args: argparse.Namespace) -> KripkeModel:
    if args.model is not None:
        return load_model_file(args.model)
    return preset(args.preset)


def cmd_kripke_eval(args: argparse.Namespace) -> ExitCode:
    model = _load(args)
    a = read_formula(args.formula)
    if isinstance(model, FiniteModel):
        node = model.root if args.node is None else args.node
        forced = forces_finite(model, node, a)
    elif isinstance(model, OmegaChainModel):
        node = 0 if args.node is None else args.node
        forced = chain_forces(model, node, a)
    elif isinstance(model, GraftedModel):
        if args.node is not None:
            raise ModelError("--node is not available for grafted models; the root is evaluated")
        node = "root"
        forced = forces_grafted(model, a)
    else:
        raise ModelError(f"Unsupported model {type(model).__name__}")
    label = "forced" if forced else "not forced"
    _emit(args, label, {"formula": str(a), "node": node, "forced": forced})
    return _verdict(forced)


def cmd_kripke_threshold(args: argparse.Namespace) -> ExitCode:
    model = _load(args)
    if not isinstance(model, OmegaChainModel):
        raise ModelError("Thresholds are defined for chain models only")
    a = read_formula(args.formula)
    t = chain_threshold(model, a)
    _emit(args, _fmt_threshold(t), {"formula": str(a), "threshold": _fmt_threshold(t)})
    return ExitCode.YES


def cmd_suite_run(args: argparse.Namespace) -> ExitCode:
    config = SuiteConfig(
        seed=args.seed,
        samples=args.samples,
        checks=tuple(args.check) if args.check else None,
        workers=args.workers,
    )
    report = run_suite(config)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_frame().to_string(index=False))
        print(f"{'PASS' if report.passed else 'FAIL'} (seed {report.seed})")
    return _verdict(report.passed)


def cmd_suite_list(args: argparse.Namespace) -> ExitCode:
    aliases: Dict[str, List[str]] = {}
    for alias, name in CHECK_ALIASES.items():
        aliases.setdefault(name, []).append(alias)
    if args.json:
        rows = [
            {"name": c.name, "description": c.description, "aliases": aliases.get(c.name, [])}
            for c in CHECKS.values()
        ]
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(n) for n in CHECKS)
        for check in CHECKS.values():
            also = f" (also {', '.join(aliases[check.name])})" if check.name in aliases else ""
            print(f"{check.name:<{width}}  {check.description}{also}")
    return ExitCode.YES


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Write results as JSON")

    parser = argparse.ArgumentParser(
        prog="negtrans", description="Negative translations, propositional deciders and Kripke models"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="Parse and print a formula canonically")
    p.add_argument("formula", help="Formula text or @file")
    p.set_defaults(handler=cmd_parse)

    p = sub.add_parser("translate", parents=[common], help="Apply a translation")
    p.add_argument("--kind", required=True, help="ko, g, goedel, ku, kr, n1, n2, fd or rfd")
    p.add_argument("--param-f", dest="param_f", help="Parameter formula F for n1, n2, fd, rfd")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_translate)

    for name, handler, help_text in (
        ("prove", cmd_prove, "Decide a propositional formula"),
        ("equiv", cmd_equiv, "Decide equivalence of two propositional formulas"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--logic", required=True, choices=[lg.value for lg in Logic])
        p.add_argument("--countermodel", action="store_true", help="Print the countermodel when unprovable")
        if name == "prove":
            p.add_argument("formula")
        else:
            p.add_argument("first")
            p.add_argument("second")
        p.set_defaults(handler=handler)

    p = sub.add_parser("classify", parents=[common], help="Place a formula on the provability-refutability scale")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_classify)

    kripke = sub.add_parser("kripke", help="Kripke model evaluation")
    ksub = kripke.add_subparsers(dest="kripke_command", required=True)
    for name, handler, help_text in (
        ("eval", cmd_kripke_eval, "Does the model force the formula?"),
        ("threshold", cmd_kripke_threshold, "Least chain node forcing the formula"),
    ):
        p = ksub.add_parser(name, parents=[common], help=help_text)
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--model", help="Model JSON file")
        source.add_argument("--preset", choices=list(PRESETS))
        if name == "eval":
            p.add_argument("--node", type=int, help="Node to evaluate at (default: the root)")
        p.add_argument("formula")
        p.set_defaults(handler=handler)

    suite = sub.add_parser("suite", help="Run the checks")
    ssub = suite.add_subparsers(dest="suite_command", required=True)
    p = ssub.add_parser("run", parents=[common], help="Run checks and report verdicts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--check", action="append", help="Run only this check (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=cmd_suite_run)
    p = ssub.add_parser("list", parents=[common], help="List registered checks")
    p.set_defaults(handler=cmd_suite_list)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else int(ExitCode.ERROR)

    configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], ExitCode] = args.handler
    try:
        return int(handler(args))
    # library errors, JSON errors and undecodable input are all ValueErrors
    except (OSError, ValueError) as exc:
        LOGGER.debug("Command failed", exc_info=True)
        print(f"negtrans: error: {exc}", file=sys.stderr)
        return int(ExitCode.ERROR)


def run() -> None:
    sys.exit(main())
