"""
Embedding Into the Unit Square - Disintegrator

Pushforward of a measure on N x [0,1] along alpha x id with
alpha(n) = 2^{-n-1}. The balls phi_n = B(alpha(n), 2^{-n-3}) are pairwise
disjoint and alpha^{-1}[phi_n] = {n}, so conditional atom masses survive the
embedding.

Author: Disintegrator Team
Date: 2026-10-17
"""

from fractions import Fraction
from typing import List

from disintegrator.exact_reals import dyadic
from disintegrator.measures import Measure, Pushforward
from disintegrator.shared.exceptions import SpaceMismatch
from disintegrator.spaces import (
    Interval, NatSet, Naturals, OpenSetName, ProductSpace, Region, UnitInterval, contains, is_empty,
)


def alpha(n: int) -> Fraction:
    return dyadic(n + 1)


def phi(n: int) -> Interval:
    """Region of the ball of radius 2^{-n-3} around alpha(n)."""
    return Interval(alpha(n) - dyadic(n + 3), alpha(n) + dyadic(n + 3))


def phi_ball(n: int) -> OpenSetName:
    return OpenSetName.ball(UnitInterval(), alpha(n), dyadic(n + 3))


def alpha_preimage(region: Interval) -> NatSet:
    """{n : alpha(n) in region}, finite unless the region reaches down to 0."""
    if is_empty(region) or region.hi <= 0:
        return NatSet.of()
    if region.lo > 0:
        hits, n = [], 0
        while alpha(n) >= region.lo:
            if contains(region, alpha(n)):
                hits.append(n)
            n += 1
        return NatSet(frozenset(hits))
    # alpha(n) -> 0 from above, so all but finitely many n land in the region
    misses, n = [], 0
    while alpha(n) >= region.hi:
        if not contains(region, alpha(n)):
            misses.append(n)
        n += 1
    return NatSet(frozenset(misses), cofinite=True)


def embed_discrete(mu: Measure) -> Pushforward:
    """
    mu on N x [0,1] as a measure on [0,1]^2.

    Raises:
        SpaceMismatch: If mu does not live on N x [0,1]
    """
    source = ProductSpace([Naturals(), UnitInterval()])
    if mu.space != source:
        raise SpaceMismatch(f"embedding needs a measure on {source}, got {mu.space}")

    def preimage(region: Region) -> List[Region]:
        first, second = region
        rows = alpha_preimage(first)
        if is_empty(rows):
            return []
        return [(rows, second)]

    target = ProductSpace([UnitInterval(), UnitInterval()])
    pushed = Pushforward(mu, target, preimage, label=f"embed({mu.label})")
    pushed.descriptor = {"type": "construction", "name": "embed", "of": mu.describe()}
    return pushed
