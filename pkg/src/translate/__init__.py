"""
Translate layer

The usual negative translations, the two parameterised variants and the
Friedman-Dragalin translations, each by structural induction.
"""

from src.translate.clauses import (
    capture_risks,
    friedman_dragalin,
    goedel_gentzen,
    kolmogorov,
    krivine,
    kuroda,
    translate,
    translate_all,
    unfold_n2_clauses,
)
from src.translate.kinds import (
    GOEDEL,
    KO,
    KR,
    KU,
    USUAL_KINDS,
    G,
    Kind,
    TranslationKind,
    fd,
    n1,
    n2,
    rfd,
)

__all__ = [
    "G",
    "GOEDEL",
    "KO",
    "KR",
    "KU",
    "USUAL_KINDS",
    "Kind",
    "TranslationKind",
    "capture_risks",
    "fd",
    "friedman_dragalin",
    "goedel_gentzen",
    "kolmogorov",
    "krivine",
    "kuroda",
    "n1",
    "n2",
    "rfd",
    "translate",
    "translate_all",
    "unfold_n2_clauses",
]
