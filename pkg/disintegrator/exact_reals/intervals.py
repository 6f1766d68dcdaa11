"""
Rational Intervals - Disintegrator

Closed rational intervals used as enclosures of real numbers.

Author: Disintegrator Team
Date: 2026-10-17
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from disintegrator.shared.exceptions import EnclosureInconsistent
from disintegrator.shared.utils import format_rational

# Arbitrary precision, always normalized
Rational = Fraction


def dyadic(p: int) -> Fraction:
    """Return 2^{-p} (p may be negative)."""
    if p >= 0:
        return Fraction(1, 1 << p)
    return Fraction(1 << -p)


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with rational endpoints"""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise EnclosureInconsistent(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, q) -> "RationalInterval":
        return cls(Fraction(q), Fraction(q))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def magnitude(self) -> Fraction:
        """Largest absolute value in the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, q) -> bool:
        return self.lo <= q <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def intersect(self, other: "RationalInterval") -> Optional["RationalInterval"]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return RationalInterval(lo, hi)

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "RationalInterval":
        return RationalInterval(-self.hi, -self.lo)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        products = (
            self.lo * other.lo, self.lo * other.hi,
            self.hi * other.lo, self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    def scale(self, q) -> "RationalInterval":
        q = Fraction(q)
        if q >= 0:
            return RationalInterval(self.lo * q, self.hi * q)
        return RationalInterval(self.hi * q, self.lo * q)

    def reciprocal(self) -> "RationalInterval":
        if not self.excludes_zero():
            raise ZeroDivisionError(f"interval {self} contains 0")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"
