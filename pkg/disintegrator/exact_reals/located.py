"""
Located Reals - Disintegrator

A real number named by a precision-indexed stream of nested rational
intervals: refine(p) has width at most 2^{-p} and refine(p+1) lies inside
refine(p). Refinements are memoized and intersected with the tightest
enclosure seen so far, so nesting holds even when the underlying
computation is not monotone.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import math
import threading
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import DivisorStraddlesZero, EnclosureInconsistent
from .intervals import RationalInterval, dyadic

logger = logging.getLogger(__name__)

RealLike = Union["LocatedReal", Fraction, int]


class LocatedReal:
    """
    Memoized enclosure stream of a real number.

    Args:
        raw: Function p -> RationalInterval of width <= 2^{-p} containing the value
        label: Optional human-readable description for logs
    """

    def __init__(self, raw: Callable[[int], RationalInterval], label: str = ""):
        self._raw = raw
        self.label = label
        self._cache: Dict[int, RationalInterval] = {}
        self._lock = threading.RLock()

    def refine(self, p: int) -> RationalInterval:
        """
        Enclosure at precision p.

        Args:
            p: Precision (natural)

        Returns:
            RationalInterval: width <= 2^{-p}, nested in every coarser answer
        """
        if p < 0:
            raise ValueError(f"precision must be >= 0, got {p}")
        with self._lock:
            hit = self._cache.get(p)
            if hit is not None:
                return hit
            finer = [q for q in self._cache if q > p]
            if finer:
                result = self._cache[min(finer)]
            else:
                result = self._raw(p)
                if result.width > dyadic(p):
                    raise EnclosureInconsistent(
                        f"{self.label or 'located real'}: width {result.width} exceeds 2^-{p}"
                    )
                coarser = [q for q in self._cache if q < p]
                if coarser:
                    previous = self._cache[max(coarser)]
                    tightened = result.intersect(previous)
                    if tightened is None:
                        raise EnclosureInconsistent(
                            f"{self.label or 'located real'}: {result} disjoint from {previous}"
                        )
                    result = tightened
            self._cache[p] = result
            return result

    def __call__(self, p: int) -> RationalInterval:
        return self.refine(p)

    def __add__(self, other: RealLike) -> "LocatedReal":
        return add(self, other)

    def __radd__(self, other: RealLike) -> "LocatedReal":
        return add(other, self)

    def __sub__(self, other: RealLike) -> "LocatedReal":
        return sub(self, other)

    def __rsub__(self, other: RealLike) -> "LocatedReal":
        return sub(other, self)

    def __mul__(self, other: RealLike) -> "LocatedReal":
        return mul(self, other)

    def __rmul__(self, other: RealLike) -> "LocatedReal":
        return mul(other, self)

    def __truediv__(self, other: RealLike) -> "LocatedReal":
        return div(self, other)

    def __neg__(self) -> "LocatedReal":
        return neg(self)

    def __repr__(self) -> str:
        return f"LocatedReal({self.label or self.refine(8)})"


def const(q) -> LocatedReal:
    """Embed an exact rational."""
    interval = RationalInterval.point(Fraction(q))
    return LocatedReal(lambda p: interval, label=str(interval.lo))


def from_fast_cauchy(seq: Callable[[int], Fraction], label: str = "") -> LocatedReal:
    """
    Build a located real from rationals with |seq(n) - x| <= 2^{-n}.

    Args:
        seq: Rational approximations
        label: Optional description
    """
    def raw(p: int) -> RationalInterval:
        centre = Fraction(seq(p + 1))
        radius = dyadic(p + 1)
        return RationalInterval(centre - radius, centre + radius)

    return LocatedReal(raw, label=label)


def _coerce(x: RealLike) -> LocatedReal:
    if isinstance(x, LocatedReal):
        return x
    return const(x)


def add(a: RealLike, b: RealLike) -> LocatedReal:
    a, b = _coerce(a), _coerce(b)
    return LocatedReal(lambda p: a.refine(p + 1) + b.refine(p + 1))


def sub(a: RealLike, b: RealLike) -> LocatedReal:
    a, b = _coerce(a), _coerce(b)
    return LocatedReal(lambda p: a.refine(p + 1) - b.refine(p + 1))


def neg(a: RealLike) -> LocatedReal:
    a = _coerce(a)
    return LocatedReal(lambda p: -a.refine(p))


def _extra_bits(a: LocatedReal, b: LocatedReal) -> int:
    bound = a.refine(0).magnitude + b.refine(0).magnitude + 1
    return math.ceil(bound).bit_length()


def mul(a: RealLike, b: RealLike) -> LocatedReal:
    a, b = _coerce(a), _coerce(b)
    extra = _extra_bits(a, b)

    def raw(p: int) -> RationalInterval:
        return a.refine(p + extra) * b.refine(p + extra)

    return LocatedReal(raw)


def reciprocal(b: RealLike, fuel: Optional[int] = None) -> LocatedReal:
    """
    1/b, after certifying that b is bounded away from 0.

    Args:
        b: Divisor
        fuel: Highest precision tried when separating b from 0

    Raises:
        DivisorStraddlesZero: If no precision <= fuel excludes 0
    """
    b = _coerce(b)
    fuel = get_config().division_fuel if fuel is None else fuel
    separated_at = None
    for q in range(fuel + 1):
        if b.refine(q).excludes_zero():
            separated_at = q
            break
    if separated_at is None:
        raise DivisorStraddlesZero(
            f"divisor enclosure {b.refine(fuel)} still contains 0 at precision {fuel}"
        )
    enclosure = b.refine(separated_at)
    floor = min(abs(enclosure.lo), abs(enclosure.hi))
    # 2^-shift <= floor^2 keeps the reciprocal width within bounds
    shift = 0
    while dyadic(shift) > floor * floor:
        shift += 1

    def raw(p: int) -> RationalInterval:
        return b.refine(max(separated_at, p + 1 + shift)).reciprocal()

    return LocatedReal(raw)


def div(a: RealLike, b: RealLike, fuel: Optional[int] = None) -> LocatedReal:
    """a / b for a divisor provably different from 0 (see :func:`reciprocal`)."""
    return mul(a, reciprocal(b, fuel))


_OPERATIONS = {
    "add": add,
    "sub": sub,
    "mul": mul,
    "div": div,
    "div-nonzero": div,
}


def arith(op: str, a: RealLike, b: Optional[RealLike] = None) -> LocatedReal:
    """
    Dispatch one of add, sub, mul, div-nonzero, neg.

    Args:
        op: Operation name
        a: First operand
        b: Second operand (unused for neg)
    """
    if op == "neg":
        return neg(a)
    if op not in _OPERATIONS:
        raise ValueError(f"unknown operation {op!r}")
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    return _OPERATIONS[op](a, b)


def located_sum(terms) -> LocatedReal:
    """Sum of finitely many located reals, each refined once per query."""
    items = [_coerce(t) for t in terms]
    if not items:
        return const(0)
    extra = (len(items) - 1).bit_length()

    def raw(p: int) -> RationalInterval:
        total = RationalInterval(0, 0)
        for item in items:
            total = total + item.refine(p + extra)
        return total

    return LocatedReal(raw)


def scale(x: RealLike, q) -> LocatedReal:
    """Multiply by an exact rational."""
    x, q = _coerce(x), Fraction(q)
    if q == 0:
        return const(0)
    extra = math.ceil(abs(q)).bit_length()
    return LocatedReal(lambda p: x.refine(p + extra).scale(q))
