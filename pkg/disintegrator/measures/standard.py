"""
Standard Measures - Disintegrator

Finitely supported rational measures, Lebesgue measure on [0,1], the
uniform measure on Cantor space, products, convex combinations and
pushforwards along maps given by region preimages.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from disintegrator.exact_reals import LocatedReal, const, dyadic, located_sum, mul, scale
from disintegrator.shared.exceptions import FuelExhausted, InconsistentValues, SpaceMismatch
from disintegrator.shared.utils import format_rational
from disintegrator.spaces import (
    Cantor, Cylinder, Interval, MetricSpace, NatSet, Naturals, ProductSpace, Region, UnitInterval,
    contains,
)
from .base import Measure

logger = logging.getLogger(__name__)


class FiniteDiscreteMeasure(Measure):
    """
    Finite rational combination of point masses at dense points.

    Args:
        space: Ambient space
        atoms: (dense tag, weight) pairs; repeated tags are merged
        label: Optional name

    Raises:
        InconsistentValues: If a weight is not positive or the weights do not sum to 1
    """

    def __init__(self, space: MetricSpace, atoms: Sequence[Tuple[Any, Any]], label: str = ""):
        super().__init__(space, label or "discrete")
        merged: Dict[int, Fraction] = {}
        for tag, weight in atoms:
            weight = Fraction(weight)
            if weight <= 0:
                raise InconsistentValues(f"atom {tag!r} has weight {weight}, must be > 0")
            index = space.index_of(tag)
            merged[index] = merged.get(index, Fraction(0)) + weight
        total = sum(merged.values(), Fraction(0))
        if total != 1:
            raise InconsistentValues(f"weights sum {format_rational(total)} ≠ 1")
        self.atoms: List[Tuple[Any, Fraction]] = [
            (space.dense(index), weight) for index, weight in sorted(merged.items())
        ]

    @classmethod
    def dirac(cls, space: MetricSpace, tag: Any) -> "FiniteDiscreteMeasure":
        return cls(space, [(tag, 1)], label=f"delta({tag})")

    def exact_mass(self, region: Region) -> Fraction:
        return sum((w for tag, w in self.atoms if contains(region, tag)), Fraction(0))

    def _box_mass(self, region: Region) -> LocatedReal:
        return const(self.exact_mass(region))

    def weight_of(self, tag: Any) -> Fraction:
        index = self.space.index_of(tag)
        return sum((w for t, w in self.atoms if self.space.index_of(t) == index), Fraction(0))

    def describe(self) -> Dict[str, Any]:
        return {
            "type": "finite-discrete",
            "atoms": [[_tag_json(tag), format_rational(w)] for tag, w in self.atoms],
        }


def _tag_json(tag: Any) -> Any:
    if isinstance(tag, Fraction):
        return format_rational(tag)
    if isinstance(tag, tuple):
        return [_tag_json(t) for t in tag]
    return tag


class Lebesgue(Measure):
    """Lebesgue measure on [0,1]"""

    def __init__(self, space: Optional[MetricSpace] = None):
        super().__init__(space or UnitInterval(), "lebesgue")
        self.descriptor = {"type": "lebesgue"}

    def _box_mass(self, region: Interval) -> LocatedReal:
        return const(region.length)


class UniformCantor(Measure):
    """Fair-coin measure on Cantor space: [w] has mass 2^{-|w|}"""

    def __init__(self, space: Optional[MetricSpace] = None):
        super().__init__(space or Cantor(), "uniform")
        self.descriptor = {"type": "uniform"}

    def _box_mass(self, region: Cylinder) -> LocatedReal:
        return const(dyadic(len(region.word)))


class ProductMeasure(Measure):
    """
    Independent product of measures.

    Args:
        factors: Factor measures, one per factor of the product space
        space: Product space (defaults to the product of the factor spaces)
    """

    def __init__(self, factors: Sequence[Measure], space: Optional[ProductSpace] = None):
        space = space or ProductSpace([f.space for f in factors])
        if [f.space for f in factors] != list(space.factors):
            raise SpaceMismatch(f"factor spaces do not match {space}")
        super().__init__(space, " x ".join(f.label for f in factors))
        self.factors = list(factors)
        self.descriptor = {"type": "product", "factors": [f.describe() for f in factors]}

    def _box_mass(self, region: tuple) -> LocatedReal:
        masses = [f.box_mass(r) for f, r in zip(self.factors, region)]
        result = masses[0]
        for m in masses[1:]:
            result = mul(result, m)
        return result


class ConvexCombination(Measure):
    """
    Finite mixture sum_i w_i * mu_i with rational weights.

    Raises:
        SpaceMismatch: If the components live on different spaces
        InconsistentValues: If the weights are not positive or do not sum to 1
    """

    def __init__(self, components: Sequence[Tuple[Any, Measure]], label: str = ""):
        if not components:
            raise InconsistentValues("convex combination of no measures")
        space = components[0][1].space
        weights = [Fraction(w) for w, _ in components]
        for _, m in components:
            if m.space != space:
                raise SpaceMismatch(f"mixture of {m.space} and {space}")
        if any(w <= 0 for w in weights):
            raise InconsistentValues("mixture weights must be > 0")
        if sum(weights) != 1:
            raise InconsistentValues(f"weights sum {format_rational(sum(weights))} ≠ 1")
        super().__init__(space, label or "convex")
        self.components = [(w, m) for w, (_, m) in zip(weights, components)]
        self.descriptor = {
            "type": "convex",
            "components": [[format_rational(w), m.describe()] for w, m in self.components],
        }

    def _box_mass(self, region: Region) -> LocatedReal:
        return located_sum(scale(m.box_mass(region), w) for w, m in self.components)


class Pushforward(Measure):
    """
    Image of a measure under a map known through region preimages.

    Args:
        source: Measure being pushed forward
        space: Target space
        preimage: Function region -> finite list of source regions whose union is its preimage
        label: Optional name
    """

    def __init__(
        self,
        source: Measure,
        space: MetricSpace,
        preimage: Callable[[Region], List[Region]],
        label: str = "",
    ):
        super().__init__(space, label or f"push({source.label})")
        self.source = source
        self.preimage = preimage

    def _box_mass(self, region: Region) -> LocatedReal:
        return self.source.mass_of_regions(self.preimage(region))


def approximate_on_naturals(mu: Measure, p: int, max_atoms: Optional[int] = None) -> Tuple[FiniteDiscreteMeasure, Fraction]:
    """
    Finite-discrete approximant of a measure on N.

    Atom weights are certified lower bounds of the singleton masses; the
    missing mass sits on one extra atom past the support scanned. The
    returned error bounds the total variation (hence the Prokhorov) distance.

    Args:
        mu: Measure on N (or on a space whose dense tags are naturals)
        p: Target precision; the error is below 2^{-p}
        max_atoms: Largest support scanned (default 2^(p+8))

    Raises:
        FuelExhausted: If the tail mass stays above 2^{-(p+1)} within max_atoms
    """
    if not isinstance(mu.space, Naturals):
        raise SpaceMismatch(f"approximant needs a measure on N, got {mu.space}")
    cap = max_atoms or (1 << (p + 8))
    size = 4
    while True:
        precision = p + 2 + size.bit_length()
        lows = [mu.box_mass(NatSet.of(n)).refine(precision).lo for n in range(size)]
        remainder = 1 - sum(lows, Fraction(0))
        if remainder < dyadic(p):
            break
        if size >= cap:
            raise FuelExhausted(f"tail of {mu.label} above 2^-{p} after {size} atoms")
        size *= 2
    atoms = [(n, w) for n, w in enumerate(lows) if w > 0]
    if remainder > 0:
        atoms.append((size, remainder))
    logger.debug(f"approximant of {mu.label}: {len(atoms)} atoms, error {remainder}")
    return FiniteDiscreteMeasure(mu.space, atoms, label=f"approx({mu.label})"), max(remainder, Fraction(0))
