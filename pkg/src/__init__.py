"""
negtrans

Negative translations, propositional deciders for classical, intuitionistic and
minimal logic, and a Kripke-semantics engine, with a harness that replays the
known results about them on random and hand-picked formulas.
"""

__version__ = "0.1.0"
