"""
Conditioning - Disintegrator

Conditioning a measure on a continuity set of positive measure, and on
sets of the form S x U in a product S x T.

The conditioned valuation is lazy: eval(W) at stage n divides the stage-n
lower bound of mu(W & U) by the stage-n upper end of the enclosure of
mu(H). Box masses divide a two-sided enclosure of mu(A & U) by the same
denominator; when H names a basic region both are plain box masses.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from fractions import Fraction
from typing import Optional

from disintegrator.exact_reals import (
    LocatedReal, LowerReal, UpperReal, div, located_from_bounds, semidecide_lt,
)
from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import NullConditioningSet, SpaceMismatch
from disintegrator.measures import ContinuitySetName, Measure, Pushforward, cset_algebra, cset_measure
from disintegrator.spaces import OpenSetName, ProductSpace, Region, intersect, intersect_opens

logger = logging.getLogger(__name__)


class ConditionedMeasure(Measure):
    """
    mu conditioned on a continuity set H of certified positive measure.

    Args:
        mu: Measure being conditioned
        h: Continuity-set name
        denominator: Enclosure of mu(H)
        certified_at: Stage at which mu(H) > 0 was certified
    """

    def __init__(self, mu: Measure, h: ContinuitySetName, denominator: LocatedReal, certified_at: int):
        super().__init__(mu.space, f"{mu.label}|{h.label}")
        self.mu = mu
        self.h = h
        self.denominator = denominator
        self.certified_at = certified_at

    def eval(self, W: OpenSetName) -> LowerReal:
        if W.space != self.space:
            raise SpaceMismatch(f"{self.label} lives on {self.space}, open set on {W.space}")
        numerator = self.mu.eval(intersect_opens(W, self.h.u))

        def raw(n: int):
            top = numerator.bound(n)
            if top is None:
                return None
            return top / self.denominator.refine(n).hi

        return LowerReal(raw, label=f"{self.label}({W.label})")

    def numerator(self, region: Region) -> LocatedReal:
        """Enclosure of mu(region & U), squeezed between the name and the witness."""
        if self.h.region is not None:
            return self.mu.box_mass(intersect(region, self.h.region))
        lower = self.mu.eval(self.h.u.restrict(region))
        outside = self.mu.eval(self.h.v.restrict(region))
        whole = self.mu.box_mass(region)

        def raw(n: int) -> Optional[Fraction]:
            seen = outside.bound(n)
            return None if seen is None else seen - whole.refine(n).hi

        return located_from_bounds(lower, UpperReal(LowerReal(raw)), label=f"{self.mu.label}[box&{self.h.label}]")

    def _box_mass(self, region: Region) -> LocatedReal:
        return div(self.numerator(region), self.denominator)


def certify_positive(mu: Measure, h: ContinuitySetName, fuel: Optional[int] = None) -> int:
    """
    Stage at which mu(U) > 0 is certified from lower bounds.

    Raises:
        NullConditioningSet: If no stage up to fuel certifies positivity
    """
    fuel = get_config().default_fuel if fuel is None else fuel
    mass = mu.eval(h.u) if h.region is None else mu.box_mass(h.region)
    verdict = semidecide_lt(0, mass, fuel)
    if not verdict:
        raise NullConditioningSet(f"{mu.label}({h.label}) not certified positive within fuel {fuel}")
    return verdict.stage


def condition(mu: Measure, h: ContinuitySetName, fuel: Optional[int] = None) -> ConditionedMeasure:
    """
    Condition mu on a continuity set.

    Args:
        mu: Measure
        h: Continuity-set name certified for mu
        fuel: Stages spent certifying mu(H) > 0

    Raises:
        SpaceMismatch: If h lives in another space
        NullConditioningSet: If positivity is not certified within fuel
    """
    if h.space != mu.space:
        raise SpaceMismatch(f"conditioning {mu.label} on {mu.space} by a set in {h.space}")
    stage = certify_positive(mu, h, fuel)
    logger.debug(f"{mu.label}({h.label}) > 0 certified at stage {stage}")
    return ConditionedMeasure(mu, h, cset_measure(mu, h), stage)


def fiber_set(mu: Measure, u: ContinuitySetName) -> ContinuitySetName:
    """S x u as a continuity set of S x T."""
    space = mu.space
    if not isinstance(space, ProductSpace) or len(space.factors) != 2:
        raise SpaceMismatch(f"fiber conditioning needs a two-factor product, got {space}")
    if u.space != space.factors[1]:
        raise SpaceMismatch(f"conditioning set in {u.space}, second factor is {space.factors[1]}")
    return cset_algebra("product", ContinuitySetName.whole(space.factors[0]), u, space=space)


def condition_fiber(mu: Measure, u: ContinuitySetName, fuel: Optional[int] = None) -> ConditionedMeasure:
    """mu conditioned on the event that the second coordinate lies in u."""
    return condition(mu, fiber_set(mu, u), fuel)


def marginal(mu: Measure, axis: int = 0) -> Pushforward:
    """Marginal of a measure on a two-factor product."""
    space = mu.space
    if not isinstance(space, ProductSpace):
        raise SpaceMismatch(f"marginal of a measure on {space}")
    whole = space.whole

    def preimage(region: Region):
        return [tuple(region if i == axis else part for i, part in enumerate(whole))]

    return Pushforward(mu, space.factors[axis], preimage, label=f"pi{axis}({mu.label})")
