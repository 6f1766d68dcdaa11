"""
Dyadic Basis - Disintegrator

J_{i,j,m} = (i/2^m, j/2^m) with i < j <= 2^m, taken relatively open in
[0,1]: it contains 0 when i = 0 and 1 when j = 2^m. Boundaries are dyadic
points, so every element is a continuity set for measures absolutely
continuous with respect to Lebesgue measure.

The canonical basis lists, level by level, the width-1 intervals and then
the width-2 intervals (units of 2^{-m}); level m holds 2^{m+1} - 1 elements.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from disintegrator.exact_reals import dyadic
from disintegrator.measures import Basis
from disintegrator.shared.utils import unpair
from disintegrator.spaces import Interval, PointName, UnitInterval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DyadicInterval:
    """(i/2^m, j/2^m), relatively open in [0,1]"""
    i: int
    j: int
    m: int

    def __post_init__(self):
        if not (0 <= self.i < self.j <= 1 << self.m):
            raise ValueError(f"need 0 <= i < j <= 2^m, got i={self.i}, j={self.j}, m={self.m}")

    @property
    def lo(self) -> Fraction:
        return Fraction(self.i, 1 << self.m)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.j, 1 << self.m)

    @property
    def region(self) -> Interval:
        return Interval(self.lo, self.hi, self.i == 0, self.j == 1 << self.m)

    def at_level(self, level: int) -> Tuple[int, int]:
        """Endpoints in units of 2^{-level} (level >= m)."""
        shift = level - self.m
        return self.i << shift, self.j << shift


def level_offset(m: int) -> int:
    """Index of the first element of level m."""
    return (1 << (m + 1)) - 2 - m


def level_of(index: int) -> int:
    m = 0
    while level_offset(m + 1) <= index:
        m += 1
    return m


class DyadicBasis(Basis):
    """Canonical basis of dyadic intervals of widths 1 and 2 per level"""

    def __init__(self):
        self.space = UnitInterval()

    def interval(self, index: int) -> DyadicInterval:
        if index < 0:
            raise IndexError(index)
        m = level_of(index)
        r = index - level_offset(m)
        size = 1 << m
        if r < size:
            return DyadicInterval(r, r + 1, m)
        return DyadicInterval(r - size, r - size + 2, m)

    def index_of(self, interval: DyadicInterval) -> int:
        """Index of a width-1 or width-2 interval."""
        width = interval.j - interval.i
        if width == 1:
            return level_offset(interval.m) + interval.i
        if width == 2:
            return level_offset(interval.m) + (1 << interval.m) + interval.i
        raise ValueError(f"{interval} is not a basis element")

    def region_of(self, index: int) -> Optional[Interval]:
        return self.interval(index).region

    def _layer(self, index: int, depth: int) -> Tuple[int, int, int]:
        """Level m + depth with the endpoints of element index in its units."""
        outer = self.interval(index)
        level = outer.m + depth
        lo, hi = outer.at_level(level)
        return level, lo, hi

    def _index(self, level: int, start: int, width: int) -> int:
        return level_offset(level) + (start if width == 1 else (1 << level) + start)

    def _ends(self, index: int, depth: int) -> List[int]:
        """Elements of level m + depth inside element index touching one of its ends."""
        level, lo, hi = self._layer(index, depth)
        out: List[int] = []
        for width in (1, 2):
            last = hi - width
            for start in sorted({lo, last}):
                if lo <= start <= last:
                    out.append(self._index(level, start, width))
        return [n for n in out if n != index]

    def _interior(self, index: int, depth: int, rank: int) -> Optional[int]:
        """rank-th element of level m + depth strictly inside element index, None past the end."""
        level, lo, hi = self._layer(index, depth)
        ones = max(hi - lo - 2, 0)
        if rank < ones:
            return self._index(level, lo + 1 + rank, 1)
        rank -= ones
        if rank < max(hi - lo - 3, 0):
            return self._index(level, lo + 1 + rank, 2)
        return None

    def refinements(self, index: int) -> Iterator[int]:
        """
        Elements contained in element index.

        Round d yields the elements at depth d touching either end, then the
        next interior element of a dovetail over (depth, rank).
        """
        code = 0
        depth = 0
        while True:
            yield from self._ends(index, depth)
            depth += 1
            while True:
                inner_depth, rank = unpair(code)
                code += 1
                found = self._interior(index, inner_depth, rank)
                if found is not None:
                    yield found
                    break

    def containing(self, t: PointName, fuel: int) -> Iterator[int]:
        """Elements of levels 0..fuel containing a ball around t, level by level."""
        for m in range(fuel + 1):
            size = 1 << m
            q = t.tag(m + 2)
            radius = dyadic(m + 3)
            cell = min(max(int(q * size), 0), size - 1)
            for start, width in ((cell, 1), (cell - 1, 2), (cell, 2)):
                if start < 0 or start + width > size:
                    continue
                interval = DyadicInterval(start, start + width, m)
                left_ok = start == 0 or interval.lo < q - radius
                right_ok = interval.j == size or q + radius < interval.hi
                if left_ok and right_ok:
                    yield self._index(m, start, width)


def dyadic_basis() -> DyadicBasis:
    return DyadicBasis()
