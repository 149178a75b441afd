"""Registered suite checks.

Each check takes the generation config and its own numpy generator and
returns a :class:`CheckOutcome`. A failing outcome names the offending
formula so the failure can be replayed through the public operations.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Tuple

import numpy as np

from src.formula import (
    BOT,
    And,
    Atom,
    Formula,
    Imp,
    Or,
    atom,
    atoms,
    collapse_triple_negation,
    fresh_atom,
    iff,
    is_nf,
    neg,
    substitute_atom,
)
from src.harness.bounded import bounded_countermodel
from src.harness.config import (
    CHAIN_ORACLE_SAMPLE_FACTOR,
    CROSS_VALIDATION_ATOMS,
    CROSS_VALIDATION_SAMPLE_FACTOR,
    IDEMPOTENCE_MAX_DEPTH,
    NF_SAMPLE_FACTOR,
    PARAMS_PER_FORMULA,
    REJECTION_TRIES,
    SYNTACTIC_SAMPLE_FACTOR,
    GenConfig,
)
from src.harness.generator import gen_formula, gen_nf_formula, gen_propositional_param
from src.harness.report import CheckOutcome
from src.kripke import (
    INF,
    OmegaChainModel,
    chain_forces,
    chain_forces_bruteforce,
    chain_model,
    chain_threshold,
    forces_finite,
    forces_grafted,
    forcing_nodes,
    grafted_model,
    separating_formula,
    single_node_model,
    unbounded_predicate_formula,
    validate_model,
)
from src.prove import (
    Logic,
    SequentProver,
    classically_valid,
    classify_scale,
    decide,
    is_provable,
    scale_consistent,
)
from src.translate import (
    GOEDEL,
    G,
    KO,
    KR,
    KU,
    TranslationKind,
    n1,
    n2,
    rfd,
    translate,
    unfold_n2_clauses,
)
from src.translate.clauses import friedman_dragalin, goedel_gentzen

LOGGER = logging.getLogger(__name__)

CheckFn = Callable[[GenConfig, np.random.Generator], CheckOutcome]

USUAL = (KO, G, GOEDEL, KU, KR)

Q = atom("Q")
CONTRADICTION = And(Q, neg(Q))

TAUTOLOGIES: Tuple[Formula, ...] = (
    Or(atom("P0"), neg(atom("P0"))),
    Imp(Imp(Imp(atom("P0"), atom("P1")), atom("P0")), atom("P0")),
    Imp(neg(neg(atom("P0"))), atom("P0")),
    Or(Imp(atom("P0"), atom("P1")), Imp(atom("P1"), atom("P0"))),
)


@dataclass(frozen=True)
class Check:
    name: str
    fn: CheckFn
    randomized: bool
    description: str


CHECKS: Dict[str, Check] = {}

# Alternative names accepted wherever a check is named; reports use the registered name.
CHECK_ALIASES: Dict[str, str] = {
    "usual-equiv-IL": "usual-equivalence",
    "thm1-soundness-n1-n2": "relativised-soundness",
    "thm1-characterisation-iff": "relativised-characterisation",
    "thm1-equivalence-iff": "relativised-equivalence",
    "paper-certificates": "kripke-certificates",
    "prop3-instances": "relativised-non-identity",
    "factorisation-1": "factorisation-fd",
    "factorisation-2": "factorisation-rfd",
    "thm2-instances": "identity-on-nf",
}


def register(name: str, description: str, randomized: bool = True):
    """Add a check function to the registry under ``name``."""

    def decorator(fn: CheckFn) -> CheckFn:
        if name in CHECKS:
            raise ValueError(f"Check '{name}' registered twice")
        CHECKS[name] = Check(name, fn, randomized, description)
        return fn

    return decorator


def check_names() -> List[str]:
    return list(CHECKS)


def canonical_check_name(name: str) -> str:
    return CHECK_ALIASES.get(name, name)


def _classical_theorems(cfg: GenConfig, rng: np.random.Generator, count: int) -> Iterator[Formula]:
    """Classically valid formulas: rejection-sampled, then fixed tautologies when sampling fails."""
    for i in range(count):
        for _ in range(REJECTION_TRIES):
            a = gen_formula(cfg, rng)
            if classically_valid(a):
                yield a
                break
        else:
            yield TAUTOLOGIES[i % len(TAUTOLOGIES)]


def _propositional(cfg: GenConfig) -> GenConfig:
    return cfg.replace(allow_quantifiers=False)


@register("usual-equivalence", "Ko, G, Goedel, Ku and Kr are pairwise IPC-equivalent")
def check_usual_equivalence(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        images = {str(k): translate(k, a) for k in USUAL}
        if images["ku"] != neg(neg(a)):
            return CheckOutcome.failed(i + 1, str(a), "Ku of a quantifier-free formula is not ~~A")
        for (k1, t1), (k2, t2) in itertools.combinations(images.items(), 2):
            if not is_provable(Logic.IPC, iff(t1, t2)):
                return CheckOutcome.failed(i + 1, str(a), f"{k1} and {k2} differ in IPC")
    return CheckOutcome.passed(cfg.samples)


@register("g-into-nf", "G lands in the negative fragment")
def check_g_into_nf(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=True)
    total = SYNTACTIC_SAMPLE_FACTOR * cfg.samples
    for i in range(total):
        a = gen_formula(cfg, rng)
        if not is_nf(translate(G, a)):
            return CheckOutcome.failed(i + 1, str(a), "G A is not in NF")
    return CheckOutcome.passed(total)


@register("g-identity-nf", "G is the identity on NF up to triple negations")
def check_g_identity_nf(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=True)
    total = NF_SAMPLE_FACTOR * cfg.samples
    for i in range(total):
        a = gen_nf_formula(cfg, rng)
        if collapse_triple_negation(translate(G, a)) != collapse_triple_negation(a):
            return CheckOutcome.failed(i + 1, str(a), "G A and A differ after collapsing ~~~P")
    return CheckOutcome.passed(total)


@register("g-iff-distribution", "G commutes with <->")
def check_g_iff_distribution(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=True)
    total = SYNTACTIC_SAMPLE_FACTOR * cfg.samples
    for i in range(total):
        a, b = gen_formula(cfg, rng), gen_formula(cfg, rng)
        if translate(G, iff(a, b)) != iff(translate(G, a), translate(G, b)):
            return CheckOutcome.failed(i + 1, f"{a} ; {b}", "G(A <-> B) is not GA <-> GB")
    return CheckOutcome.passed(total)


@register("soundness-g-ml", "CPC theorems and consequences are carried by G into MPC")
def check_soundness_g_ml(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    samples = 0
    for a in itertools.chain(TAUTOLOGIES, _classical_theorems(cfg, rng, cfg.samples)):
        samples += 1
        if not is_provable(Logic.MPC, translate(G, a)):
            return CheckOutcome.failed(samples, str(a), "MPC does not prove G A")

    # finite contexts, reduced to single formulas through the deduction theorem
    for _ in range(cfg.samples):
        for _ in range(REJECTION_TRIES):
            a1, a2, b = gen_formula(cfg, rng), gen_formula(cfg, rng), gen_formula(cfg, rng)
            if classically_valid(Imp(And(a1, a2), b)):
                break
        else:
            a1, a2, b = atom("P0"), Imp(atom("P0"), atom("P1")), atom("P1")
        samples += 1
        image = Imp(And(translate(G, a1), translate(G, a2)), translate(G, b))
        if not is_provable(Logic.MPC, image):
            return CheckOutcome.failed(samples, f"{a1} ; {a2} |- {b}", "MPC does not prove GA1 & GA2 -> GB")
    return CheckOutcome.passed(samples)


@register("characterisation-usual", "Every usual translation is classically equivalent to its input")
def check_characterisation_usual(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        for k in USUAL:
            if not is_provable(Logic.CPC, iff(translate(k, a), a)):
                return CheckOutcome.failed(i + 1, str(a), f"CPC does not prove {k}(A) <-> A")
    return CheckOutcome.passed(cfg.samples)


def _fresh_parameter(a: Formula) -> Atom:
    """An atom not in ``a`` to stand for the parameter F.

    N1, N2 and FD insert F uniformly, so a translation under F is the
    translation under the fresh atom with F substituted for it, and MPC is
    closed under that substitution.
    """
    return Atom(fresh_atom(atoms(a)))


def _instance_of(parametric: Formula, q: Atom, f: Formula, image: Formula) -> bool:
    return substitute_atom(parametric, q.pred, f) == image


@register("relativised-soundness", "N1 and N2 are sound into MPC for every propositional F")
def check_relativised_soundness(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    samples = 0
    for a in _classical_theorems(cfg, rng, max(1, cfg.samples // 2)):
        q = _fresh_parameter(a)
        for kind in (n1(q), n2(q)):
            if not is_provable(Logic.MPC, translate(kind, a)):
                return CheckOutcome.failed(samples + 1, f"A = {a}, F = {q}", f"MPC does not prove {kind.kind.value} A")
        for _ in range(PARAMS_PER_FORMULA):
            f = gen_propositional_param(rng)
            samples += 1
            for make in (n1, n2):
                if not _instance_of(translate(make(q), a), q, f, translate(make(f), a)):
                    return CheckOutcome.failed(
                        samples,
                        f"A = {a}, F = {f}",
                        f"{make(f).kind.value} A is not an instance of the fresh-atom case",
                    )
    return CheckOutcome.passed(samples)


def _witness_fails(logic: Logic, kind: TranslationKind, reference: Formula) -> bool:
    """Whether ``kind(bot) <-> reference`` is unprovable, with a countermodel that checks out."""
    goal = iff(translate(kind, BOT), reference)
    decision = decide(logic, goal)
    if decision.provable:
        return False
    if decision.countermodel is None:
        return True
    model = decision.countermodel
    return not validate_model(model) and model.root not in forcing_nodes(model, decision.formula)


@register("relativised-characterisation", "N1/N2 characterisation holds iff CPC refutes F")
def check_relativised_characterisation(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        for kind in (n1(CONTRADICTION), n2(CONTRADICTION)):
            if not is_provable(Logic.CPC, iff(translate(kind, a), a)):
                return CheckOutcome.failed(
                    i + 1,
                    f"A = {a}, F = {CONTRADICTION}",
                    f"CPC does not prove {kind.kind.value}(A) <-> A",
                )
    for kind in (n1(Q), n2(Q)):
        if not _witness_fails(Logic.CPC, kind, BOT):
            return CheckOutcome.failed(
                cfg.samples,
                f"A = bot, F = {Q}",
                f"{kind.kind.value} characterisation holds for a non-refutable F",
            )
    return CheckOutcome.passed(cfg.samples + 2)


@register("relativised-equivalence", "N1/N2 are IPC-equivalent to G iff IPC refutes F")
def check_relativised_equivalence(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        ga = translate(G, a)
        for kind in (n1(CONTRADICTION), n2(CONTRADICTION)):
            if not is_provable(Logic.IPC, iff(translate(kind, a), ga)):
                return CheckOutcome.failed(
                    i + 1,
                    f"A = {a}, F = {CONTRADICTION}",
                    f"IPC does not prove {kind.kind.value} A <-> G A",
                )
    for kind in (n1(Q), n2(Q)):
        if not _witness_fails(Logic.IPC, kind, translate(G, BOT)):
            return CheckOutcome.failed(
                cfg.samples,
                f"A = bot, F = {Q}",
                f"{kind.kind.value} A <-> G A holds for a non-refutable F",
            )
    return CheckOutcome.passed(cfg.samples + 2)


def kripke_certificates() -> Dict[str, bool]:
    """The pinned Kripke verdicts, keyed by a short description, with expected values applied.

    Every value is True exactly when the verdict matches the expected one.
    """
    f = unbounded_predicate_formula()
    q = atom("Q")
    grafted = grafted_model()
    return {
        "chain forces F from node 0": chain_threshold(chain_model(), f) == 0,
        "single-node model forces ~F": forces_finite(single_node_model(), 0, neg(f)),
        "grafted root refuses ((Q->F)->F) -> ~~Q | F": not forces_grafted(grafted, separating_formula()),
        "grafted root forces (Q->F)->F": forces_grafted(grafted, Imp(Imp(q, f), f)),
        "grafted root refuses ~~Q": not forces_grafted(grafted, neg(neg(q))),
        "grafted root refuses F": not forces_grafted(grafted, f),
    }


@register("kripke-certificates", "Pinned verdicts on the chain, single-node and grafted presets", randomized=False)
def check_kripke_certificates(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    verdicts = kripke_certificates()
    for what, ok in verdicts.items():
        if not ok:
            return CheckOutcome.failed(len(verdicts), what, "pinned Kripke verdict changed")
    return CheckOutcome.passed(len(verdicts))


@register("relativised-non-identity", "With a first-order F, N1 and N2 move bot in IL", randomized=False)
def check_relativised_non_identity(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    f = unbounded_predicate_formula()
    model = chain_model()
    if chain_threshold(model, f) != 0:
        return CheckOutcome.failed(1, str(f), "chain no longer forces F")
    for kind in (n1(f), n2(f)):
        image = translate(kind, BOT)
        if chain_threshold(model, iff(image, BOT)) == 0:
            return CheckOutcome.failed(2, f"{kind.kind.value}(bot) = {image}", "chain forces N(bot) <-> bot")
    return CheckOutcome.passed(3)


@register("factorisation-fd", "MPC proves N2 A <-> FD(G A)")
def check_factorisation_fd(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        f = gen_propositional_param(rng)
        q = _fresh_parameter(a)
        parametric = iff(translate(n2(q), a), friedman_dragalin(goedel_gentzen(a), q))
        goal = iff(translate(n2(f), a), friedman_dragalin(goedel_gentzen(a), f))
        if not _instance_of(parametric, q, f, goal):
            return CheckOutcome.failed(
                i + 1,
                f"A = {a}, F = {f}",
                "N2 A <-> FD(G A) is not an instance of the fresh-atom case",
            )
        if not is_provable(Logic.MPC, parametric):
            return CheckOutcome.failed(i + 1, f"A = {a}, F = {q}", "MPC does not prove N2 A <-> FD(G A)")
    return CheckOutcome.passed(cfg.samples)


@register("factorisation-rfd", "N2 A is syntactically rFD(G A) and matches the unfolded clauses")
def check_factorisation_rfd(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=True)
    total = SYNTACTIC_SAMPLE_FACTOR * cfg.samples
    for i in range(total):
        a = gen_formula(cfg, rng)
        f = gen_propositional_param(rng)
        image = translate(n2(f), a)
        if image != translate(rfd(f), translate(G, a)):
            return CheckOutcome.failed(i + 1, f"A = {a}, F = {f}", "N2 A differs from rFD(G A)")
        if image != unfold_n2_clauses(a, f):
            return CheckOutcome.failed(i + 1, f"A = {a}, F = {f}", "N2 A differs from its unfolded clauses")
    return CheckOutcome.passed(total)


@register("identity-on-nf", "The usual translations act as the identity on NF in IPC")
def check_identity_on_nf(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=False, max_depth=min(cfg.max_depth, IDEMPOTENCE_MAX_DEPTH))
    for i in range(cfg.samples):
        a = gen_nf_formula(cfg, rng)
        if not is_nf(translate(G, a)):
            return CheckOutcome.failed(i + 1, str(a), "G A is not in NF")
        for k in USUAL:
            if not is_provable(Logic.IPC, iff(translate(k, a), a)):
                return CheckOutcome.failed(i + 1, str(a), f"IPC does not prove {k}(A) <-> A")
    return CheckOutcome.passed(cfg.samples)


@register("idempotence", "Translating twice is IPC-equivalent to translating once")
def check_idempotence(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=False, max_depth=min(cfg.max_depth, IDEMPOTENCE_MAX_DEPTH))
    kinds = USUAL + (n1(CONTRADICTION), n2(CONTRADICTION))
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        for k in kinds:
            once = translate(k, a)
            if not is_provable(Logic.IPC, iff(translate(k, once), once)):
                return CheckOutcome.failed(
                    i + 1,
                    str(a),
                    f"IPC does not prove {k.kind.value}({k.kind.value} A) <-> {k.kind.value} A",
                )
    return CheckOutcome.passed(cfg.samples)


def strengthening_witnesses() -> Dict[str, bool]:
    """Concrete formulas showing Ko, Ku and Kr neither land in NF nor fix it syntactically."""
    p, q = atom("P"), atom("Q")
    return {
        "Ku(P | Q) is outside NF": not is_nf(translate(KU, Or(p, q))),
        "Ko(P | Q) is outside NF": not is_nf(translate(KO, Or(p, q))),
        "Kr(P & Q) is outside NF": not is_nf(translate(KR, And(p, q))),
        "Ko(bot & bot) is not bot & bot": translate(KO, And(BOT, BOT)) != And(BOT, BOT),
        "Ku(bot) is not bot": translate(KU, BOT) != BOT,
        "Kr(bot) is not bot": translate(KR, BOT) != BOT,
    }


@register("non-strengthening-witnesses", "Ko, Ku and Kr fail the G strengthenings", randomized=False)
def check_non_strengthening(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    witnesses = strengthening_witnesses()
    for what, ok in witnesses.items():
        if not ok:
            return CheckOutcome.failed(len(witnesses), what, "witness no longer separates")
    return CheckOutcome.passed(len(witnesses))


@register(
    "decider-cross-validation",
    "Hierarchy, double-negation embedding, countermodels and small-model search agree",
)
def check_decider_cross_validation(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = cfg.replace(allow_quantifiers=False, atom_count=min(cfg.atom_count, CROSS_VALIDATION_ATOMS))
    total = CROSS_VALIDATION_SAMPLE_FACTOR * cfg.samples
    for i in range(total):
        a = gen_formula(cfg, rng)
        cpc = is_provable(Logic.CPC, a)
        ipc = decide(Logic.IPC, a)
        mpc = decide(Logic.MPC, a)

        if (mpc.provable and not ipc.provable) or (ipc.provable and not cpc):
            return CheckOutcome.failed(i + 1, str(a), "MPC <= IPC <= CPC violated")
        # plain search here: the prover settles bot goals classically by default
        if cpc != SequentProver(classical_bot_goals=False).provable((), neg(neg(a))):
            return CheckOutcome.failed(i + 1, str(a), "CPC |- A differs from IPC |- ~~A")
        for decision in (ipc, mpc):
            model = decision.countermodel
            if model is None:
                continue
            if validate_model(model) or model.root in forcing_nodes(model, decision.formula):
                return CheckOutcome.failed(i + 1, str(a), f"{decision.logic.value} countermodel does not refute")
        if ipc.provable and bounded_countermodel(a) is not None:
            return CheckOutcome.failed(i + 1, str(a), "small countermodel found for an IPC theorem")
    return CheckOutcome.passed(total)


def _random_chain(rng: np.random.Generator, names: Tuple[str, ...]) -> OmegaChainModel:
    nullary = {}
    for name in names:
        nullary[name] = INF if rng.random() < 0.25 else int(rng.integers(0, 6))
    return OmegaChainModel(nullary=nullary)


@register("chain-oracle-agreement", "Chain thresholds agree with brute-force forcing")
def check_chain_oracle_agreement(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    total = CHAIN_ORACLE_SAMPLE_FACTOR * cfg.samples
    for i in range(total):
        a = gen_formula(cfg, rng)
        model = _random_chain(rng, cfg.atom_names)
        top = max((int(t) for t in model.nullary.values() if t != INF), default=0)
        for k in range(top + 4):
            if chain_forces(model, k, a) != chain_forces_bruteforce(model, a, k):
                return CheckOutcome.failed(
                    i + 1,
                    f"{a} at node {k} of {dict(model.nullary)}",
                    "threshold and brute force disagree",
                )
    return CheckOutcome.passed(total)


@register("scale-consistency", "The scale class agrees with the deciders on A and ~A")
def check_scale_consistency(cfg: GenConfig, rng: np.random.Generator) -> CheckOutcome:
    cfg = _propositional(cfg)
    for i in range(cfg.samples):
        a = gen_formula(cfg, rng)
        if not scale_consistent(a, classify_scale(a)):
            return CheckOutcome.failed(i + 1, str(a), "scale class inconsistent with decide")
    return CheckOutcome.passed(cfg.samples)


__all__ = [
    "CHECKS",
    "CHECK_ALIASES",
    "Check",
    "CheckFn",
    "TAUTOLOGIES",
    "canonical_check_name",
    "check_names",
    "kripke_certificates",
    "register",
    "strengthening_witnesses",
]
