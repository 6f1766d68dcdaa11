"""
Command-Line Parsing - Disintegrator

Compact text forms for regions and points:

    regions   "lo:hi" interval of [0,1] (relatively open), "w:0110" cylinder,
              "n:0,2,5" finite set of naturals, "*" the whole space;
              product regions join factors with "|"
    points    "p/q" in [0,1] (dyadic exact, others by rounding), a 0/1 word
              padded with 0s in 2^omega, a natural; products join with ","
    bits      "1011" or "1,0,1,1"

Author: Disintegrator Team
Date: 2026-10-17
"""

from fractions import Fraction
from typing import List

from disintegrator.shared.exceptions import UnknownKind
from disintegrator.shared.utils import parse_rational
from disintegrator.spaces import (
    Cantor, Cylinder, Interval, MetricSpace, NatSet, Naturals, PointName, ProductSpace, Region, UnitInterval,
)


def parse_bits(text: str) -> List[int]:
    cleaned = text.replace(",", "").replace(" ", "")
    if not cleaned or set(cleaned) - {"0", "1"}:
        raise ValueError(f"not a bit string: {text!r}")
    return [int(c) for c in cleaned]


def parse_range(text: str) -> List[int]:
    """ "4..16" or "3" or "2,5,7" """
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",")]


def parse_region(space: MetricSpace, text: str) -> Region:
    """Region of space from its compact form."""
    text = text.strip()
    if isinstance(space, ProductSpace):
        parts = text.split("|")
        if len(parts) != len(space.factors):
            raise ValueError(f"{text!r} needs {len(space.factors)} factors separated by '|'")
        return tuple(parse_region(f, p) for f, p in zip(space.factors, parts))
    if text == "*":
        return space.whole
    if isinstance(space, UnitInterval):
        lo, hi = (parse_rational(p) for p in text.split(":", 1))
        return Interval(lo, hi, lo == 0, hi == 1)
    if isinstance(space, Cantor):
        prefix, _, word = text.partition(":")
        if prefix != "w" or set(word) - {"0", "1"}:
            raise ValueError(f"cylinder {text!r} must look like w:0110")
        return Cylinder(word)
    if isinstance(space, Naturals):
        prefix, _, items = text.partition(":")
        if prefix != "n":
            raise ValueError(f"set of naturals {text!r} must look like n:0,2,5")
        return NatSet.of(*(int(i) for i in items.split(",") if i))
    raise UnknownKind(f"no region syntax for {space}")


def parse_point(space: MetricSpace, text: str) -> PointName:
    """Point name of space from its compact form."""
    text = text.strip()
    if isinstance(space, ProductSpace):
        parts = text.split(",")
        if len(parts) != len(space.factors):
            raise ValueError(f"{text!r} needs {len(space.factors)} coordinates separated by ','")
        return PointName.product(space, [parse_point(f, p) for f, p in zip(space.factors, parts)])
    if isinstance(space, UnitInterval):
        q = parse_rational(text)
        if q.denominator & (q.denominator - 1) == 0:
            return PointName.exact(space, q)
        return PointName.rational(space, q)
    if isinstance(space, Cantor):
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 word: {text!r}")
        return PointName.cantor(space, lambda i: int(text[i]) if i < len(text) else 0, label=text or "0^w")
    if isinstance(space, Naturals):
        return PointName.exact(space, int(text))
    raise UnknownKind(f"no point syntax for {space}")


def probe_regions(space: MetricSpace, count: int) -> List[Region]:
    """Default probes: atoms of N, dyadic cells of [0,1], cylinders of 2^omega."""
    if isinstance(space, Naturals):
        return [NatSet.of(n) for n in range(count)]
    if isinstance(space, UnitInterval):
        level = max(count - 1, 0).bit_length()
        size = 1 << level
        return [Interval(Fraction(i, size), Fraction(i + 1, size), i == 0, i + 1 == size) for i in range(size)]
    if isinstance(space, Cantor):
        length = max(count - 1, 0).bit_length()
        return [Cylinder(format(i, f"0{length}b") if length else "") for i in range(1 << length)]
    raise UnknownKind(f"no default probes for {space}")


def region_label(region: Region) -> str:
    if isinstance(region, tuple):
        return "|".join(region_label(r) for r in region)
    if isinstance(region, Interval):
        return f"{region.lo}:{region.hi}"
    if isinstance(region, Cylinder):
        return f"w:{region.word}"
    if isinstance(region, NatSet):
        return ("n-cof:" if region.cofinite else "n:") + ",".join(str(n) for n in sorted(region.elements))
    return str(region)
