"""
Sierpinski Verdicts - Disintegrator

SemiBool is the answer of a semidecision: either "yes, certified at stage n"
or "unknown after fuel f". Fuel counts refinement stages 0..f inclusive.

Author: Disintegrator Team
Date: 2026-10-17
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from .located import LocatedReal
from .lower import Bound, LowerReal, UpperReal

Comparable = Union[LocatedReal, LowerReal, UpperReal, Fraction, int]


@dataclass(frozen=True)
class SemiBool:
    """Verdict of a semidecidable property"""
    stage: Optional[int]
    fuel: int

    @classmethod
    def yes(cls, stage: int, fuel: Optional[int] = None) -> "SemiBool":
        return cls(stage=stage, fuel=stage if fuel is None else fuel)

    @classmethod
    def unknown(cls, fuel: int) -> "SemiBool":
        return cls(stage=None, fuel=fuel)

    @property
    def is_yes(self) -> bool:
        return self.stage is not None

    def __bool__(self) -> bool:
        return self.is_yes

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        if self.is_yes:
            return {"verdict": "yes", "stage": self.stage}
        return {"verdict": "unknown", "fuel": self.fuel}


def _upper_at(x: Comparable, n: int) -> Bound:
    if isinstance(x, LocatedReal):
        return x.refine(n).hi
    if isinstance(x, UpperReal):
        return x.bound(n)
    if isinstance(x, LowerReal):
        return None  # no upper information
    return Fraction(x)


def _lower_at(x: Comparable, n: int) -> Bound:
    if isinstance(x, LocatedReal):
        return x.refine(n).lo
    if isinstance(x, LowerReal):
        return x.bound(n)
    if isinstance(x, UpperReal):
        return None
    return Fraction(x)


def semidecide_lt(a: Comparable, b: Comparable, fuel: int) -> SemiBool:
    """
    Semidecide a < b.

    Uses upper bounds of a and lower bounds of b, so a LowerReal on the left
    (or an UpperReal on the right) can never produce a yes.

    Args:
        a: Left operand
        b: Right operand
        fuel: Last stage examined

    Returns:
        SemiBool: yes at the first separating stage, else unknown(fuel)
    """
    for n in range(fuel + 1):
        hi, lo = _upper_at(a, n), _lower_at(b, n)
        if hi is not None and lo is not None and hi < lo:
            return SemiBool.yes(n, fuel)
    return SemiBool.unknown(fuel)
