"""Legendrian 4-plat fronts: invariants, Chekanov-Eliashberg DGA, fillability."""

from .cobordism import build_filling, reduce_to_positive, validate_transcript
from .fillability import classify, obstruction_battery, theorem1_verdict
from .plat import PlatTuple, build_front, classical_invariants, parse_tuple

__all__ = [
    "PlatTuple",
    "build_filling",
    "build_front",
    "classical_invariants",
    "classify",
    "obstruction_battery",
    "parse_tuple",
    "reduce_to_positive",
    "theorem1_verdict",
    "validate_transcript",
]
