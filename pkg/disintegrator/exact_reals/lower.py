"""
Lower and Upper Reals - Disintegrator

LowerReal names a real by nondecreasing rational lower bounds (None stands
for -infinity); UpperReal is the mirror image. A lower and an upper real that
approach the same value squeeze into a LocatedReal.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Union

from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import FuelExhausted, WitnessInconsistent
from .intervals import RationalInterval, dyadic
from .located import LocatedReal

logger = logging.getLogger(__name__)

Bound = Optional[Fraction]


def _max(a: Bound, b: Bound) -> Bound:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _min(a: Bound, b: Bound) -> Bound:
    if a is None or b is None:
        return None
    return min(a, b)


class LowerReal:
    """
    Monotone stream of lower bounds.

    Answers are clamped between the cached neighbouring stages so that
    bound(n) is nondecreasing regardless of query order.

    Args:
        raw: Function n -> rational lower bound or None (meaning -infinity)
        label: Optional description
    """

    def __init__(self, raw: Callable[[int], Bound], label: str = ""):
        self._raw = raw
        self.label = label
        self._cache: Dict[int, Bound] = {}
        self._lock = threading.RLock()

    def bound(self, n: int) -> Bound:
        if n < 0:
            raise ValueError(f"stage must be >= 0, got {n}")
        with self._lock:
            if n in self._cache:
                return self._cache[n]
            value = self._raw(n)
            value = None if value is None else Fraction(value)
            coarser = [m for m in self._cache if m < n]
            finer = [m for m in self._cache if m > n]
            if coarser:
                value = _max(value, self._cache[max(coarser)])
            if finer:
                value = _min(value, self._cache[min(finer)])
            self._cache[n] = value
            return value

    def __call__(self, n: int) -> Bound:
        return self.bound(n)

    @classmethod
    def const(cls, q) -> "LowerReal":
        q = Fraction(q)
        return cls(lambda n: q, label=str(q))

    @classmethod
    def from_located(cls, x: LocatedReal) -> "LowerReal":
        return cls(lambda n: x.refine(n).lo, label=x.label)

    def __add__(self, other: "LowerReal") -> "LowerReal":
        def raw(n: int) -> Bound:
            a, b = self.bound(n), other.bound(n)
            if a is None or b is None:
                return None
            return a + b
        return LowerReal(raw)

    def scale(self, q) -> "LowerReal":
        """Multiply by a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("LowerReal can only be scaled by q >= 0")

        def raw(n: int) -> Bound:
            b = self.bound(n)
            return None if b is None else b * q
        return LowerReal(raw)

    def complement(self, total=1) -> "UpperReal":
        """total - self, as an upper real."""
        return UpperReal(self, offset=Fraction(total))

    def __repr__(self) -> str:
        return f"LowerReal({self.label})"


class UpperReal:
    """
    Monotone stream of upper bounds, stored as ``offset - lower``.

    Args:
        lower: LowerReal whose negation (shifted by offset) is named
        offset: Rational shift
    """

    def __init__(self, lower: LowerReal, offset=0, label: str = ""):
        self._lower = lower
        self._offset = Fraction(offset)
        self.label = label

    def bound(self, n: int) -> Bound:
        b = self._lower.bound(n)
        return None if b is None else self._offset - b

    def __call__(self, n: int) -> Bound:
        return self.bound(n)

    @classmethod
    def from_located(cls, x: LocatedReal) -> "UpperReal":
        return cls(LowerReal(lambda n: -x.refine(n).hi), label=x.label)

    @classmethod
    def const(cls, q) -> "UpperReal":
        return cls(LowerReal.const(-Fraction(q)))

    def __repr__(self) -> str:
        return f"UpperReal({self.label})"


def lower_sum(terms: Union[Sequence[LowerReal], Callable[[int], Optional[LowerReal]]]) -> LowerReal:
    """
    Infinite sum of nonnegative lower reals.

    bound(n) adds the stage-n bounds of the first n terms; a missing term or
    a -infinity bound counts as 0 since every term is nonnegative.

    Args:
        terms: Sequence (finite stream, implicitly zero afterwards) or function i -> LowerReal
    """
    if callable(terms):
        term_at = terms
    else:
        items = list(terms)

        def term_at(i: int) -> Optional[LowerReal]:
            return items[i] if i < len(items) else None

    def raw(n: int) -> Fraction:
        total = Fraction(0)
        for i in range(n):
            term = term_at(i)
            if term is None:
                continue
            b = term.bound(n)
            if b is not None and b > 0:
                total += b
        return total

    return LowerReal(raw, label="lower_sum")


def located_from_bounds(
    lower: LowerReal,
    upper: UpperReal,
    max_stage: Optional[int] = None,
    label: str = "",
) -> LocatedReal:
    """
    Squeeze a lower and an upper real into a located real.

    Stages are searched p, 2p, 4p, ... up to max_stage.

    Raises:
        WitnessInconsistent: If a lower bound exceeds an upper bound
        FuelExhausted: If no stage up to max_stage is tight enough
    """
    cap = get_config().max_squeeze_stage if max_stage is None else max_stage

    def raw(p: int) -> RationalInterval:
        target = dyadic(p)
        n = max(p, 1)
        last = None
        while True:
            stage = min(n, max(cap, p))
            lo, hi = lower.bound(stage), upper.bound(stage)
            if lo is not None and hi is not None:
                if lo > hi:
                    raise WitnessInconsistent(
                        f"{label or 'squeeze'}: lower {lo} exceeds upper {hi} at stage {stage}"
                    )
                if hi - lo <= target:
                    return RationalInterval(lo, hi)
                last = (lo, hi)
            if stage >= max(cap, p):
                raise FuelExhausted(
                    f"{label or 'squeeze'}: width {None if last is None else last[1] - last[0]} "
                    f"above 2^-{p} at stage {stage}"
                )
            n *= 2

    return LocatedReal(raw, label=label)
