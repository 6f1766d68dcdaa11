"""
Computable Metric Spaces - Disintegrator

Space descriptors with a total dense sequence, an exact metric on dense
points, and the basic regions used to denote open balls:

- unit-interval: [0,1] with the dyadic rationals 0, 1, 1/2, 1/4, 3/4, 1/8, ...
- naturals-discrete: N with the discrete metric
- cantor: 2^omega with eventually-zero sequences (canonical words ending in 1,
  ordered by length then bits) and the ultrametric 2^{-first disagreement}
- product: max metric over the factors, dense points by Cantor pairing
- ultrametric-pair: cantor x cantor

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from disintegrator.exact_reals import LocatedReal, const
from disintegrator.shared.exceptions import UnknownKind
from disintegrator.shared.utils import pair, unpair
from .regions import (
    ALL_NATURALS, ALL_SEQUENCES, UNIT, Cylinder, Interval, NatSet, Region, cantor_bit,
)

logger = logging.getLogger(__name__)


class SpaceKind(str, Enum):
    """Supported space kinds"""
    UNIT_INTERVAL = "unit-interval"
    NATURALS = "naturals-discrete"
    CANTOR = "cantor"
    PRODUCT = "product"
    ULTRAMETRIC_PAIR = "ultrametric-pair"


class MetricSpace(ABC):
    """
    Separable metric space with a computable dense sequence.

    Subclasses provide exact distances between dense points (all metrics here
    take rational values on dense points) and the region of an open ball.
    """

    kind: SpaceKind
    is_ultrametric: bool = False

    @abstractmethod
    def dense(self, index: int) -> Any:
        """Tag of the dense point with this index."""

    @abstractmethod
    def index_of(self, tag: Any) -> int:
        """Inverse of :meth:`dense`."""

    @abstractmethod
    def distance(self, a: Any, b: Any) -> Fraction:
        """Exact distance between two dense tags."""

    @abstractmethod
    def ball_region(self, centre: Any, radius: Fraction) -> Optional[Region]:
        """Region of the open ball B(centre, radius), None when empty."""

    @property
    @abstractmethod
    def whole(self) -> Region:
        """Region denoting the whole space."""

    def metric(self, i: int, j: int) -> LocatedReal:
        """Distance between dense points i and j as a located real."""
        return const(self.distance(self.dense(i), self.dense(j)))

    def describe(self) -> Dict[str, Any]:
        """Kind tree for measure-spec documents"""
        return {"kind": self.kind.value}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MetricSpace) and self.describe() == other.describe()

    def __hash__(self) -> int:
        return hash(repr(self.describe()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


class UnitInterval(MetricSpace):
    """[0,1] with the euclidean metric and dyadic dense points"""

    kind = SpaceKind.UNIT_INTERVAL

    def dense(self, index: int) -> Fraction:
        if index < 0:
            raise IndexError(index)
        if index < 2:
            return Fraction(index)
        b = (index - 1).bit_length()
        a = 2 * (index - (1 << (b - 1)) - 1) + 1
        return Fraction(a, 1 << b)

    def index_of(self, tag) -> int:
        tag = Fraction(tag)
        if tag in (0, 1):
            return int(tag)
        b = tag.denominator.bit_length() - 1
        if tag.denominator != 1 << b or not 0 < tag < 1:
            raise ValueError(f"{tag} is not a dyadic point of [0,1]")
        return (tag.numerator - 1) // 2 + (1 << (b - 1)) + 1

    def distance(self, a, b) -> Fraction:
        return abs(Fraction(a) - Fraction(b))

    def ball_region(self, centre, radius) -> Optional[Region]:
        radius = Fraction(radius)
        if radius <= 0:
            return None
        lo, hi = Fraction(centre) - radius, Fraction(centre) + radius
        return Interval(max(lo, Fraction(0)), min(hi, Fraction(1)), lo < 0, hi > 1)

    @property
    def whole(self) -> Region:
        return UNIT


class Naturals(MetricSpace):
    """N with the discrete metric; balls of radius <= 1 are singletons"""

    kind = SpaceKind.NATURALS
    is_ultrametric = True

    def dense(self, index: int) -> int:
        if index < 0:
            raise IndexError(index)
        return index

    def index_of(self, tag) -> int:
        return int(tag)

    def distance(self, a, b) -> Fraction:
        return Fraction(0 if a == b else 1)

    def ball_region(self, centre, radius) -> Optional[Region]:
        radius = Fraction(radius)
        if radius <= 0:
            return None
        if radius > 1:
            return ALL_NATURALS
        return NatSet.of(int(centre))

    @property
    def whole(self) -> Region:
        return ALL_NATURALS


class Cantor(MetricSpace):
    """2^omega with the ultrametric 2^{-(first disagreement)}"""

    kind = SpaceKind.CANTOR
    is_ultrametric = True

    def dense(self, index: int) -> str:
        if index < 0:
            raise IndexError(index)
        if index == 0:
            return ""
        length = index.bit_length()
        prefix = index - (1 << (length - 1))
        return (format(prefix, f"0{length - 1}b") if length > 1 else "") + "1"

    def index_of(self, tag: str) -> int:
        word = tag.rstrip("0")
        if not word:
            return 0
        prefix = int(word[:-1], 2) if len(word) > 1 else 0
        return (1 << (len(word) - 1)) + prefix

    def distance(self, a: str, b: str) -> Fraction:
        for i in range(max(len(a), len(b))):
            if cantor_bit(a, i) != cantor_bit(b, i):
                return Fraction(1, 1 << i)
        return Fraction(0)

    def ball_region(self, centre: str, radius) -> Optional[Region]:
        radius = Fraction(radius)
        if radius <= 0:
            return None
        if radius > 1:
            return ALL_SEQUENCES
        # B(c, r) is the cylinder of length L = min{k : 2^-k < r}
        length = 0
        while Fraction(1, 1 << length) >= radius:
            length += 1
        return Cylinder("".join(cantor_bit(centre, i) for i in range(length)))

    @property
    def whole(self) -> Region:
        return ALL_SEQUENCES


class ProductSpace(MetricSpace):
    """Finite product with the max metric"""

    kind = SpaceKind.PRODUCT

    def __init__(self, factors: Sequence[MetricSpace]):
        if len(factors) < 2:
            raise UnknownKind(f"product needs at least two factors, got {len(factors)}")
        self.factors: Tuple[MetricSpace, ...] = tuple(factors)
        self.is_ultrametric = all(f.is_ultrametric for f in self.factors)

    def _split(self, index: int) -> List[int]:
        indices = []
        for _ in range(len(self.factors) - 1):
            head, index = unpair(index)
            indices.append(head)
        indices.append(index)
        return indices

    def dense(self, index: int) -> tuple:
        if index < 0:
            raise IndexError(index)
        return tuple(f.dense(i) for f, i in zip(self.factors, self._split(index)))

    def index_of(self, tag: tuple) -> int:
        indices = [f.index_of(t) for f, t in zip(self.factors, tag)]
        index = indices[-1]
        for head in reversed(indices[:-1]):
            index = pair(head, index)
        return index

    def distance(self, a: tuple, b: tuple) -> Fraction:
        return max(f.distance(x, y) for f, x, y in zip(self.factors, a, b))

    def ball_region(self, centre: tuple, radius) -> Optional[Region]:
        parts = [f.ball_region(c, radius) for f, c in zip(self.factors, centre)]
        if any(p is None for p in parts):
            return None
        return tuple(parts)

    @property
    def whole(self) -> Region:
        return tuple(f.whole for f in self.factors)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "factors": [f.describe() for f in self.factors]}


class UltrametricPair(ProductSpace):
    """Cantor x Cantor"""

    kind = SpaceKind.ULTRAMETRIC_PAIR

    def __init__(self):
        super().__init__([Cantor(), Cantor()])

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind.value}


def mk_space(kind, factors: Optional[Sequence[Any]] = None) -> MetricSpace:
    """
    Build a space descriptor.

    Args:
        kind: SpaceKind or its string value
        factors: For products, the factor spaces (descriptors or kinds)

    Raises:
        UnknownKind: If the kind is not supported
    """
    try:
        kind = SpaceKind(kind)
    except ValueError:
        raise UnknownKind(f"unknown space kind {kind!r}")
    if kind is SpaceKind.UNIT_INTERVAL:
        return UnitInterval()
    if kind is SpaceKind.NATURALS:
        return Naturals()
    if kind is SpaceKind.CANTOR:
        return Cantor()
    if kind is SpaceKind.ULTRAMETRIC_PAIR:
        return UltrametricPair()
    if not factors:
        raise UnknownKind("product needs factors")
    return ProductSpace([f if isinstance(f, MetricSpace) else mk_space(f) for f in factors])


def space_from_tree(tree: Any) -> MetricSpace:
    """Build a space from a kind tree ("cantor" or {"kind": "product", "factors": [...]})."""
    if isinstance(tree, str):
        return mk_space(tree)
    if not isinstance(tree, dict) or "kind" not in tree:
        raise UnknownKind(f"malformed space tree {tree!r}")
    factors = [space_from_tree(f) for f in tree.get("factors", [])]
    return mk_space(tree["kind"], factors or None)


def naturals_times_pair() -> ProductSpace:
    """N x C where C = 2^omega x 2^omega."""
    return ProductSpace([Naturals(), UltrametricPair()])
