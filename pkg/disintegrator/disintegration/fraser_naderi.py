"""
Fraser-Naderi Streams - Disintegrator

On an ultrametric T every ball is a continuity set, and conditionals on a
regular shrinking sequence of balls around t converge to the
disintegration whenever it exists. The stream of conditionals is handed
back raw; a limit is certified only against a caller-supplied convergence
rate. Past a stage budget, a stream whose last two terms still disagree may
be replaced by the S-marginal; that substitute is labelled heuristic.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Tuple

from disintegrator.conditioning import marginal
from disintegrator.exact_reals import RationalInterval, dyadic
from disintegrator.measures import ContinuitySetName, Measure
from disintegrator.shared.exceptions import SpaceMismatch
from disintegrator.spaces import Cylinder, NatSet, PointName, Region, UltrametricPair
from disintegrator.spaces.regions import cantor_bit
from .result import DisintegrationResult
from .tjur import conditional

logger = logging.getLogger(__name__)

HEURISTIC = "heuristic-fallback"


@dataclass
class RegularScheme:
    """
    balls(t, n): continuity set around t of radius at most r_n -> 0, with
    mu(E_n) >= alpha * mu(B_n) for the enclosing closed balls.
    """
    balls: Callable[[PointName, int], ContinuitySetName]
    alpha: Fraction


def cylinder_scheme() -> RegularScheme:
    """[u_n] x [s_n] around (u, s) in 2^omega x 2^omega; balls are their own E_n."""
    space = UltrametricPair()

    def balls(t: PointName, n: int) -> ContinuitySetName:
        u, s = t.tag(n)
        words = ("".join(cantor_bit(u, i) for i in range(n)), "".join(cantor_bit(s, i) for i in range(n)))
        return ContinuitySetName.from_region(space, (Cylinder(words[0]), Cylinder(words[1])), label=f"ball{n}")

    return RegularScheme(balls=balls, alpha=Fraction(1))


class FraserNaderiStream:
    """
    Conditionals of mu on the scheme's balls around t.

    Args:
        mu: Measure on S x T, T ultrametric
        scheme: Regular ball scheme
        t: Point of T
    """

    def __init__(self, mu: Measure, scheme: RegularScheme, t: PointName):
        if not t.space.is_ultrametric:
            raise SpaceMismatch(f"Fraser-Naderi streams need an ultrametric T, got {t.space}")
        self.mu = mu
        self.scheme = scheme
        self.t = t
        self._terms: Dict[int, Measure] = {}
        self._lock = threading.Lock()

    def term(self, n: int) -> Measure:
        """nu(n) = mu conditioned on S x balls(t, n), marginalized to S."""
        with self._lock:
            if n not in self._terms:
                self._terms[n] = conditional(self.mu, self.scheme.balls(self.t, n))
            return self._terms[n]

    def value(self, n: int, region: Region, p: int) -> RationalInterval:
        return self.term(n).box_mass(region).refine(p)

    def terms(self, start: int, stop: int) -> Iterable[Tuple[int, Measure]]:
        for n in range(start, stop):
            yield n, self.term(n)

    def limit_value(self, region: Region, p: int, rate: Callable[[int], int]) -> RationalInterval:
        """
        Enclosure of the limit's mass of region.

        Args:
            rate: p -> stage after which terms stay within 2^{-p} of the limit
        """
        inner = self.value(rate(p + 1), region, p + 1)
        slack = dyadic(p + 1)
        return RationalInterval(max(inner.lo - slack, Fraction(0)), min(inner.hi + slack, Fraction(1)))

    def limit(self, p: int, rate: Callable[[int], int]) -> DisintegrationResult:
        """The term rate(p) as the disintegration within 2^{-p}; unverified, the rate is claimed."""
        n = rate(p)
        return DisintegrationResult(
            self.term(n), index=n, error=dyadic(p), verified=False, method="fraser-naderi", details={"rate": "claimed"},
        )

    def settle(self, budget: int, p: int, probes: Iterable[Region] = ()) -> Tuple[Measure, str]:
        """
        Term at the stage budget, or the S-marginal when the last two terms
        disagree by more than 2^{-p} on a probe region (default: atoms 0..p+3).
        """
        probes = list(probes) or [NatSet.of(n) for n in range(p + 4)]
        for region in probes:
            before, after = self.value(budget - 1, region, p + 2), self.value(budget, region, p + 2)
            if max(after.lo - before.hi, before.lo - after.hi) > dyadic(p):
                logger.warning(f"Fraser-Naderi terms still moving at stage {budget}; using the marginal")
                return marginal(self.mu, 0), HEURISTIC
        return self.term(budget), "term"


def fraser_naderi(mu: Measure, scheme: RegularScheme, t: PointName) -> FraserNaderiStream:
    return FraserNaderiStream(mu, scheme, t)


def claim_rate(p: int) -> int:
    """Stage after which mixture ratios at faithful points are within 2^{-p}."""
    return p + 3
