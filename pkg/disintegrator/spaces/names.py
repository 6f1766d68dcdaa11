"""
Point and Open-Set Names - Disintegrator

PointName: precision p -> dense index, with d(point(p), x) <= 2^{-(p+1)}
(which implies the fast-Cauchy bound d(point(p), point(p+1)) < 2^{-p}).

OpenSetName: a stream of entries, each an open ball (dense index, rational
radius), a basic open region of the space, or the PADDING sentinel. The name
denotes the union of its entries; padding-only streams denote the empty set.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, List, Optional, Sequence, Union

from disintegrator.exact_reals import SemiBool, dyadic
from disintegrator.shared.exceptions import CauchyViolation, SpaceMismatch
from disintegrator.shared.utils import pair, unpair
from .metric import MetricSpace, ProductSpace
from .regions import Region, intersect, subset

logger = logging.getLogger(__name__)


# ===== POINT NAMES =====


class PointName:
    """
    Name of a point as a precision-indexed dense-sequence index.

    Args:
        space: Ambient space
        index: Function p -> dense index of an approximation within 2^{-(p+1)}
        label: Optional description
    """

    def __init__(self, space: MetricSpace, index: Callable[[int], int], label: str = ""):
        self.space = space
        self._index = lru_cache(maxsize=None)(index)
        self.label = label

    def index(self, p: int) -> int:
        return self._index(p)

    def tag(self, p: int) -> Any:
        """Dense tag of the precision-p approximation."""
        return self.space.dense(self._index(p))

    @classmethod
    def exact(cls, space: MetricSpace, tag: Any) -> "PointName":
        """Constant name of a dense point."""
        index = space.index_of(tag)
        return cls(space, lambda p: index, label=str(tag))

    @classmethod
    def rational(cls, space: MetricSpace, q) -> "PointName":
        """Name of a rational point of [0,1] by dyadic rounding."""
        q = Fraction(q)
        if not 0 <= q <= 1:
            raise ValueError(f"{q} is outside [0,1]")

        def index(p: int) -> int:
            scale = 1 << (p + 1)
            return space.index_of(Fraction(round(q * scale), scale))
        return cls(space, index, label=str(q))

    @classmethod
    def cantor(cls, space: MetricSpace, bit: Callable[[int], int], label: str = "") -> "PointName":
        """Name of a Cantor point from its bit function (prefix of length p+1)."""
        def index(p: int) -> int:
            word = "".join("1" if bit(i) else "0" for i in range(p + 1))
            return space.index_of(word)
        return cls(space, index, label=label)

    @classmethod
    def product(cls, space: ProductSpace, components: Sequence["PointName"]) -> "PointName":
        """Name of a point of a product from names of its coordinates."""
        def index(p: int) -> int:
            return space.index_of(tuple(c.tag(p) for c in components))
        return cls(space, index, label="(" + ", ".join(c.label for c in components) + ")")

    def __repr__(self) -> str:
        return f"PointName({self.label or self.tag(4)})"


def _check_pair(seq: Callable[[int], PointName], n: int) -> None:
    first, second = seq(n), seq(n + 1)
    q = n + 4
    gap = first.space.distance(first.tag(q), second.tag(q))
    if gap >= dyadic(n) + dyadic(q):
        raise CauchyViolation(
            f"terms {n} and {n + 1} are {gap} apart at precision {q}, bound is 2^-{n}"
        )


def limit_fast_cauchy(
    seq: Callable[[int], PointName],
    space: Optional[MetricSpace] = None,
    check_prefix: int = 8,
) -> PointName:
    """
    Limit of a fast-Cauchy sequence of point names.

    The bound d(x_n, x_{n+1}) < 2^{-n} is spot-checked on the first
    ``check_prefix`` terms eagerly and on the terms each query touches.

    Raises:
        CauchyViolation: If a sampled pair breaks the bound
    """
    space = space or seq(0).space
    for n in range(check_prefix):
        _check_pair(seq, n)

    def index(p: int) -> int:
        _check_pair(seq, p + 2)
        return space.index_of(seq(p + 3).tag(p + 3))

    return PointName(space, index, label="lim")


# ===== OPEN-SET NAMES =====


class _Padding:
    """Sentinel entry of an open-set name"""

    def __repr__(self) -> str:
        return "PADDING"


PADDING = _Padding()


@dataclass(frozen=True)
class Ball:
    """Open ball around a dense point"""
    index: int
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))


Entry = Union[Ball, _Padding, Region]


class OpenSetName:
    """
    Enumerated union of open balls and basic open regions.

    Args:
        space: Ambient space
        entry: Function n -> entry
        length: Number of leading entries after which only padding follows (None if unknown)
        label: Optional description
    """

    def __init__(
        self,
        space: MetricSpace,
        entry: Callable[[int], Entry],
        length: Optional[int] = None,
        label: str = "",
    ):
        self.space = space
        self._entry = entry
        self.length = length
        self.label = label

    def entry(self, n: int) -> Entry:
        if self.length is not None and n >= self.length:
            return PADDING
        return self._entry(n)

    def entries(self, n: int) -> List[Entry]:
        """First n entries (fewer for finite names)."""
        count = n if self.length is None else min(n, self.length)
        return [self.entry(i) for i in range(count)]

    def region_of(self, entry: Entry) -> Optional[Region]:
        if entry is PADDING:
            return None
        if isinstance(entry, Ball):
            return self.space.ball_region(self.space.dense(entry.index), entry.radius)
        return entry

    def regions(self, n: int) -> List[Region]:
        """Regions of the first n non-padding entries."""
        out = []
        for e in self.entries(n):
            region = self.region_of(e)
            if region is not None:
                out.append(region)
        return out

    # ----- constructors -----

    @classmethod
    def empty(cls, space: MetricSpace) -> "OpenSetName":
        return cls(space, lambda n: PADDING, length=0, label="empty")

    @classmethod
    def whole(cls, space: MetricSpace) -> "OpenSetName":
        return cls.finite(space, [space.whole], label="whole")

    @classmethod
    def finite(cls, space: MetricSpace, entries: Sequence[Entry], label: str = "") -> "OpenSetName":
        items = list(entries)
        return cls(space, lambda n: items[n], length=len(items), label=label)

    @classmethod
    def ball(cls, space: MetricSpace, centre: Any, radius) -> "OpenSetName":
        """Single open ball around a dense tag."""
        return cls.finite(space, [Ball(space.index_of(centre), Fraction(radius))],
                          label=f"B({centre}, {radius})")

    @classmethod
    def from_stream(cls, space: MetricSpace, entry: Callable[[int], Entry], label: str = "") -> "OpenSetName":
        return cls(space, entry, label=label)

    def restrict(self, region: Region) -> "OpenSetName":
        """Entry-wise intersection with a basic region."""
        def entry(n: int) -> Entry:
            own = self.region_of(self.entry(n))
            if own is None:
                return PADDING
            part = intersect(own, region)
            return PADDING if part is None else part
        return OpenSetName(self.space, entry, length=self.length, label=f"{self.label}&box")

    def __repr__(self) -> str:
        return f"OpenSetName({self.label})"


def member(x: PointName, U: OpenSetName, fuel: int) -> SemiBool:
    """
    Semidecide x in U.

    At stage n the first n+1 entries are tested against the precision-n
    approximation: a ball (c, r) certifies when d(x_n, c) + 2^{-n} < r, a
    region when it contains the open ball B(x_n, 2^{-n}).

    Args:
        x: Point name
        U: Open-set name
        fuel: Last stage examined
    """
    if x.space != U.space:
        raise SpaceMismatch(f"point in {x.space} vs open set in {U.space}")
    space = U.space
    for n in range(fuel + 1):
        approx = x.tag(n)
        for e in U.entries(n + 1):
            if e is PADDING:
                continue
            if isinstance(e, Ball):
                if space.distance(approx, space.dense(e.index)) + dyadic(n) < e.radius:
                    return SemiBool.yes(n, fuel)
                continue
            neighbourhood = space.ball_region(approx, dyadic(n))
            if neighbourhood is not None and subset(neighbourhood, e):
                return SemiBool.yes(n, fuel)
    return SemiBool.unknown(fuel)


def union_opens(Us: Union[Sequence[OpenSetName], Callable[[int], OpenSetName]],
                space: Optional[MetricSpace] = None) -> OpenSetName:
    """
    Countable union by diagonal interleaving: entry <i, j> is entry j of name i.

    Args:
        Us: Finite sequence of names or function i -> name
        space: Ambient space (required for an empty sequence or a function)
    """
    if callable(Us):
        if space is None:
            space = Us(0).space
        return OpenSetName(space, lambda n: Us(unpair(n)[0]).entry(unpair(n)[1]), label="union")

    names = list(Us)
    if space is None:
        if not names:
            raise SpaceMismatch("union of no names needs an explicit space")
        space = names[0].space
    for name in names:
        if name.space != space:
            raise SpaceMismatch(f"union mixes {name.space} and {space}")

    length: Optional[int] = 0
    for i, name in enumerate(names):
        if name.length is None:
            length = None
            break
        if name.length:
            length = max(length, pair(i, name.length - 1) + 1)

    def entry(n: int) -> Entry:
        i, j = unpair(n)
        return names[i].entry(j) if i < len(names) else PADDING

    return OpenSetName(space, entry, length=length, label="union")


def product_open(U: OpenSetName, V: OpenSetName, space: ProductSpace) -> OpenSetName:
    """Open name of U x V in a two-factor product."""
    length = None
    if U.length is not None and V.length is not None:
        length = 0 if not (U.length and V.length) else pair(U.length - 1, V.length - 1) + 1

    def entry(n: int) -> Entry:
        i, j = unpair(n)
        left, right = U.region_of(U.entry(i)), V.region_of(V.entry(j))
        if left is None or right is None:
            return PADDING
        return (left, right)

    return OpenSetName(space, entry, length=length, label=f"{U.label}x{V.label}")


def intersect_opens(U: OpenSetName, V: OpenSetName) -> OpenSetName:
    """Open name of U & V: entry <i, j> is region i of U met with region j of V."""
    if U.space != V.space:
        raise SpaceMismatch(f"intersection of {U.space} and {V.space}")
    length = None
    if U.length is not None and V.length is not None:
        length = 0 if not (U.length and V.length) else pair(U.length - 1, V.length - 1) + 1

    def entry(n: int) -> Entry:
        i, j = unpair(n)
        left, right = U.region_of(U.entry(i)), V.region_of(V.entry(j))
        if left is None or right is None:
            return PADDING
        part = intersect(left, right)
        return PADDING if part is None else part

    return OpenSetName(U.space, entry, length=length, label=f"{U.label}&{V.label}")
