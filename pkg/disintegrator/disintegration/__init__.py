# Disintegration Module
from .result import DisintegrationResult
from .tjur import SeparationEnumeration, conditional, separated, tjur_distance_triples, tjur_disintegrate
from .modulus import TjurModulus, modulus_disintegrate, trivial_modulus
from .fraser_naderi import (
    HEURISTIC, FraserNaderiStream, RegularScheme, claim_rate, cylinder_scheme, fraser_naderi,
)

__all__ = [
    "DisintegrationResult",
    "SeparationEnumeration", "conditional", "separated", "tjur_distance_triples", "tjur_disintegrate",
    "TjurModulus", "modulus_disintegrate", "trivial_modulus",
    "HEURISTIC", "FraserNaderiStream", "RegularScheme", "claim_rate", "cylinder_scheme", "fraser_naderi",
]
