"""
Disintegration Results - Disintegrator

Every disintegration hands back the conditional it settled on together
with a Prokhorov error tag and the verified flag of the oracle it used.

Author: Disintegrator Team
Date: 2026-10-17
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Tuple

from disintegrator.exact_reals import RationalInterval
from disintegrator.measures import FiniteDiscreteMeasure, Measure, approximate_on_naturals
from disintegrator.spaces import NatSet, Region


@dataclass
class DisintegrationResult:
    """
    A conditional standing in for the disintegration at a point.

    Args:
        measure: Conditional on S
        index: Basis index of the conditioning set
        error: Bound on the Prokhorov distance to the disintegration
        verified: False when a fuel-bounded oracle was consulted or a rate was only claimed
        method: tjur, modulus or fraser-naderi
    """
    measure: Measure
    index: int
    error: Fraction
    verified: bool = True
    method: str = "tjur"
    details: Dict[str, Any] = field(default_factory=dict)

    def enclose(self, region: Region, p: int) -> RationalInterval:
        """Enclosure of the disintegration's mass of region, error tag included."""
        inner = self.measure.box_mass(region).refine(p)
        return RationalInterval(max(inner.lo - self.error, Fraction(0)), min(inner.hi + self.error, Fraction(1)))

    def atom(self, n: int, p: int) -> RationalInterval:
        return self.enclose(NatSet.of(n), p)

    def approximant(self, p: int) -> Tuple[FiniteDiscreteMeasure, Fraction]:
        """Finite-discrete approximant on N and its total Prokhorov error."""
        approx, err = approximate_on_naturals(self.measure, p)
        return approx, err + self.error

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "index": self.index,
            "error": f"{self.error.numerator}/{self.error.denominator}",
            "verified": self.verified,
            **self.details,
        }
