# Exact Reals Module
from .intervals import Rational, RationalInterval, dyadic
from .located import (
    LocatedReal, const, from_fast_cauchy, add, sub, mul, neg, div, reciprocal, arith, located_sum, scale,
)
from .lower import LowerReal, UpperReal, lower_sum, located_from_bounds
from .semibool import SemiBool, semidecide_lt
from .trig import PI, pi_enclosure, sin_pi_enclosure, cos_pi_enclosure

__all__ = [
    "Rational", "RationalInterval", "dyadic",
    "LocatedReal", "const", "from_fast_cauchy", "add", "sub", "mul", "neg", "div", "reciprocal", "arith",
    "located_sum", "scale",
    "LowerReal", "UpperReal", "lower_sum", "located_from_bounds",
    "SemiBool", "semidecide_lt",
    "PI", "pi_enclosure", "sin_pi_enclosure", "cos_pi_enclosure",
]
