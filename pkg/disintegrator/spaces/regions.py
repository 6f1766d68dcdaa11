"""
Basic Regions - Disintegrator

Exact set algebra on the basic regions of each space: intervals in [0,1]
(with open or closed ends), finite and cofinite subsets of N, cylinders in
Cantor space, and boxes (tuples of regions) in products.

Author: Disintegrator Team
Date: 2026-10-17
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import singledispatch
from typing import FrozenSet, List, Optional, Tuple, Union

# ===== REGION TYPES =====


@dataclass(frozen=True)
class Interval:
    """Interval of rationals with independently open or closed ends"""
    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))

    @property
    def length(self) -> Fraction:
        return Fraction(0) if is_empty(self) else self.hi - self.lo


@dataclass(frozen=True)
class NatSet:
    """Finite subset of N, or the complement of one when cofinite"""
    elements: FrozenSet[int] = field(default_factory=frozenset)
    cofinite: bool = False

    @classmethod
    def of(cls, *elements: int) -> "NatSet":
        return cls(frozenset(elements))


@dataclass(frozen=True)
class Cylinder:
    """All binary sequences extending a finite word"""
    word: str = ""


Region = Union[Interval, NatSet, Cylinder, Tuple]

UNIT = Interval(0, 1, True, True)
ALL_NATURALS = NatSet(frozenset(), True)
ALL_SEQUENCES = Cylinder("")


def cantor_bit(word: str, i: int) -> str:
    """Bit i of the eventually-zero sequence word 0^omega."""
    return word[i] if i < len(word) else "0"


# ===== EMPTINESS & MEMBERSHIP =====


@singledispatch
def is_empty(region) -> bool:
    raise TypeError(f"not a region: {region!r}")


@is_empty.register
def _(region: Interval) -> bool:
    if region.lo > region.hi:
        return True
    return region.lo == region.hi and not (region.lo_closed and region.hi_closed)


@is_empty.register
def _(region: NatSet) -> bool:
    return not region.cofinite and not region.elements


@is_empty.register
def _(region: Cylinder) -> bool:
    return False


@is_empty.register
def _(region: tuple) -> bool:
    return any(is_empty(r) for r in region)


@singledispatch
def contains(region, tag) -> bool:
    """Exact membership of a dense-sequence tag."""
    raise TypeError(f"not a region: {region!r}")


@contains.register
def _(region: Interval, tag) -> bool:
    above = region.lo < tag or (region.lo_closed and tag == region.lo)
    below = tag < region.hi or (region.hi_closed and tag == region.hi)
    return above and below


@contains.register
def _(region: NatSet, tag) -> bool:
    return (tag in region.elements) != region.cofinite


@contains.register
def _(region: Cylinder, tag) -> bool:
    return all(cantor_bit(tag, i) == b for i, b in enumerate(region.word))


@contains.register
def _(region: tuple, tag) -> bool:
    return all(contains(r, t) for r, t in zip(region, tag))


# ===== INTERSECTION =====


@singledispatch
def intersect(a, b) -> Optional[Region]:
    """Intersection, or None when empty."""
    raise TypeError(f"not a region: {a!r}")


@intersect.register
def _(a: Interval, b: Interval) -> Optional[Region]:
    if a.lo > b.lo:
        lo, lo_closed = a.lo, a.lo_closed
    elif b.lo > a.lo:
        lo, lo_closed = b.lo, b.lo_closed
    else:
        lo, lo_closed = a.lo, a.lo_closed and b.lo_closed
    if a.hi < b.hi:
        hi, hi_closed = a.hi, a.hi_closed
    elif b.hi < a.hi:
        hi, hi_closed = b.hi, b.hi_closed
    else:
        hi, hi_closed = a.hi, a.hi_closed and b.hi_closed
    result = Interval(lo, hi, lo_closed, hi_closed)
    return None if is_empty(result) else result


@intersect.register
def _(a: NatSet, b: NatSet) -> Optional[Region]:
    if a.cofinite and b.cofinite:
        result = NatSet(a.elements | b.elements, True)
    elif a.cofinite:
        result = NatSet(b.elements - a.elements)
    elif b.cofinite:
        result = NatSet(a.elements - b.elements)
    else:
        result = NatSet(a.elements & b.elements)
    return None if is_empty(result) else result


@intersect.register
def _(a: Cylinder, b: Cylinder) -> Optional[Region]:
    if b.word.startswith(a.word):
        return b
    if a.word.startswith(b.word):
        return a
    return None


@intersect.register
def _(a: tuple, b: tuple) -> Optional[Region]:
    parts = []
    for x, y in zip(a, b):
        part = intersect(x, y)
        if part is None:
            return None
        parts.append(part)
    return tuple(parts)


# ===== DIFFERENCE =====


@singledispatch
def difference(a, b) -> List[Region]:
    """a minus b as a list of pairwise disjoint nonempty regions."""
    raise TypeError(f"not a region: {a!r}")


@difference.register
def _(a: Interval, b: Interval) -> List[Region]:
    if is_empty(a):
        return []
    if intersect(a, b) is None:
        return [a]
    pieces = [
        intersect(a, Interval(a.lo, b.lo, a.lo_closed, not b.lo_closed)),
        intersect(a, Interval(b.hi, a.hi, not b.hi_closed, a.hi_closed)),
    ]
    return [p for p in pieces if p is not None]


@difference.register
def _(a: NatSet, b: NatSet) -> List[Region]:
    result = intersect(a, NatSet(b.elements, not b.cofinite))
    return [] if result is None else [result]


def _flip(bit: str) -> str:
    return "1" if bit == "0" else "0"


@difference.register
def _(a: Cylinder, b: Cylinder) -> List[Region]:
    if a.word.startswith(b.word):
        return []
    if not b.word.startswith(a.word):
        return [a]
    return [Cylinder(b.word[:i] + _flip(b.word[i])) for i in range(len(a.word), len(b.word))]


@difference.register
def _(a: tuple, b: tuple) -> List[Region]:
    if intersect(a, b) is None:
        return [] if is_empty(a) else [a]
    pieces: List[Region] = []
    for i in range(len(a)):
        head = tuple(intersect(a[j], b[j]) for j in range(i))
        for piece in difference(a[i], b[i]):
            pieces.append(head + (piece,) + tuple(a[i + 1:]))
    return pieces


def subset(a: Region, b: Region) -> bool:
    """Exact containment a <= b."""
    return not difference(a, b)


def disjointify(regions: List[Region]) -> List[Region]:
    """Pairwise disjoint regions with the same union."""
    pieces: List[Region] = []
    for region in regions:
        if is_empty(region):
            continue
        fresh = [region]
        for existing in pieces:
            fresh = [part for candidate in fresh for part in difference(candidate, existing)]
            if not fresh:
                break
        pieces.extend(fresh)
    return pieces


# ===== EXTERIOR (interior of the complement) =====


@singledispatch
def exterior(region, whole) -> List[Region]:
    """Open regions covering the interior of the complement of region in whole."""
    raise TypeError(f"not a region: {region!r}")


@exterior.register
def _(region: Interval, whole) -> List[Region]:
    pieces = []
    if region.lo > whole.lo:
        pieces.append(Interval(whole.lo, region.lo, whole.lo_closed, False))
    if region.hi < whole.hi:
        pieces.append(Interval(region.hi, whole.hi, False, whole.hi_closed))
    return [p for p in pieces if not is_empty(p)]


@exterior.register
def _(region: NatSet, whole) -> List[Region]:
    complement = NatSet(region.elements, not region.cofinite)
    return [] if is_empty(complement) else [complement]


@exterior.register
def _(region: Cylinder, whole) -> List[Region]:
    return difference(whole, region)


@exterior.register
def _(region: tuple, whole) -> List[Region]:
    pieces: List[Region] = []
    for i, component in enumerate(region):
        for outside in exterior(component, whole[i]):
            pieces.append(tuple(whole[:i]) + (outside,) + tuple(whole[i + 1:]))
    return pieces
