"""
Tjur-Limit Search - Disintegrator

For a measure mu on S x T and a basis B of continuity sets of its
T-marginal, mu^{B(n)} is the S-marginal of mu conditioned on S x B(n).
The separation enumeration xi lists the codes <n, k> for which some
refinement B(m) of B(n) has a conditional certifiably more than 2^{-k}
away from mu^{B(n)} in Prokhorov distance. At a Tjur point t, any basis
set around t with xi(n, k) = 0 carries a conditional within 2 * 2^{-k} of
the disintegration at t.

Separation is certified from enclosures: on N by the positive parts of
atom differences, on [0,1] and 2^omega by a probe cell A with
mu^{B(m)}(A) > mu^{B(n)}(A^eps) + eps.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from fractions import Fraction
from itertools import islice
from typing import Dict, FrozenSet, List, Optional, Tuple

from disintegrator.conditioning import condition_fiber, marginal
from disintegrator.exact_reals import dyadic
from disintegrator.measures import Basis, ContinuitySetName, Measure, continuity_basis
from disintegrator.oracle_harness import Enumeration, FuelPolicy, ec
from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import NullConditioningSet, SearchDiverged
from disintegrator.shared.utils import pair, unpair
from disintegrator.spaces import Cantor, Cylinder, Interval, NatSet, Naturals, PointName, UnitInterval
from .result import DisintegrationResult

logger = logging.getLogger(__name__)


def conditional(mu: Measure, h: ContinuitySetName, fuel: Optional[int] = None) -> Measure:
    """S-marginal of mu conditioned on S x h."""
    return marginal(condition_fiber(mu, h, fuel), 0)


# ===== SEPARATION CERTIFICATES =====


def _probe_cells(space, k: int) -> List[Tuple[object, object]]:
    """Cells A with their 2^{-k}-neighbourhoods A^eps."""
    eps = dyadic(k)
    if isinstance(space, UnitInterval):
        level = k + 2
        cells = []
        for i in range(1 << level):
            lo, hi = Fraction(i, 1 << level), Fraction(i + 1, 1 << level)
            grown = Interval(max(lo - eps, Fraction(0)), min(hi + eps, Fraction(1)), lo - eps <= 0, hi + eps >= 1)
            cells.append((Interval(lo, hi), grown))
        return cells
    if isinstance(space, Cantor):
        # a cylinder of length k + 1 is its own 2^{-k}-neighbourhood
        length = k + 1
        return [(Cylinder(format(i, f"0{length}b")),) * 2 for i in range(1 << length)]
    return []


def separated(a: Measure, b: Measure, k: int, p: int) -> bool:
    """Whether d_P(a, b) > 2^{-k} is certified at precision p."""
    eps = dyadic(k)
    if isinstance(a.space, Naturals):
        atoms = range(2 * (k + 4))
        for first, second in ((a, b), (b, a)):
            gap = Fraction(0)
            for n in atoms:
                region = NatSet.of(n)
                gap += max(first.box_mass(region).refine(p).lo - second.box_mass(region).refine(p).hi, Fraction(0))
            if gap > eps:
                return True
        return False
    for cell, grown in _probe_cells(a.space, k):
        for first, second in ((a, b), (b, a)):
            if first.box_mass(cell).refine(p).lo - second.box_mass(grown).refine(p).hi > eps:
                return True
    return False


class SeparationEnumeration(Enumeration):
    """
    xi: codes <n, k> whose conditional is separated from one of its refinements.

    member_at(<n, k>, stage) looks at the first ``stage`` refinements of
    B(n) with enclosures at precision k + 4 + bitlength(stage); both grow
    with the stage, so membership is monotone.
    """

    def __init__(self, mu: Measure, basis: Basis, fuel: Optional[int] = None):
        super().__init__(self._codes_at, label=f"xi[{mu.label}]")
        self.mu = mu
        self.basis = basis
        self.fuel = fuel
        self._conditionals: Dict[int, Optional[Measure]] = {}
        self._refinements: Dict[int, List[int]] = {}
        self._found: Dict[int, int] = {}
        self._xi_lock = threading.RLock()

    def conditional(self, index: int) -> Optional[Measure]:
        """mu^{B(index)}, None when B(index) has no certified mass."""
        with self._xi_lock:
            if index not in self._conditionals:
                try:
                    self._conditionals[index] = conditional(self.mu, self.basis.sets(index), self.fuel)
                except NullConditioningSet:
                    logger.debug(f"B{index} has no certified mass under {self.mu.label}")
                    self._conditionals[index] = None
            return self._conditionals[index]

    def refinements(self, index: int, count: int) -> List[int]:
        with self._xi_lock:
            known = self._refinements.get(index, [])
            if len(known) < count:
                known = list(islice(self.basis.refinements(index), count))
                self._refinements[index] = known
            return known[:count]

    def member_at(self, code: int, stage: int) -> bool:
        if stage < 0:
            return False
        with self._xi_lock:
            if code in self._found:
                return self._found[code] <= stage
            n, k = unpair(code)
            outer = self.conditional(n)
            if outer is None:
                return False
            p = k + 4 + stage.bit_length()
            for m in self.refinements(n, stage):
                inner = self.conditional(m)
                if inner is not None and separated(inner, outer, k, p):
                    self._found[code] = stage
                    logger.debug(f"xi: B{m} inside B{n} separated beyond 2^-{k} at stage {stage}")
                    return True
            return False

    def _codes_at(self, stage: int) -> FrozenSet[int]:
        return frozenset(c for c in range(stage + 1) if self.member_at(c, stage))


def tjur_distance_triples(mu: Measure, basis: Basis, fuel: int) -> List[Tuple[int, int, int]]:
    """
    Triples (m, n, k) with d_P(mu^{B(m)}, mu^{B(n)}) > 2^{-k} certified within fuel.

    Pairs run over basis indices n <= fuel, the first fuel refinements m of
    B(n), and k <= fuel; enclosures are taken at precision k + 4 + bitlength(fuel).
    """
    xi = SeparationEnumeration(mu, basis)
    found = []
    for n in range(fuel + 1):
        if xi.conditional(n) is None:
            continue
        for m in xi.refinements(n, fuel):
            inner = xi.conditional(m)
            if inner is None:
                continue
            for k in range(fuel + 1):
                if separated(inner, xi.conditional(n), k, k + 4 + fuel.bit_length()):
                    found.append((m, n, k))
    return found


def tjur_disintegrate(
    mu: Measure,
    t: PointName,
    k: int,
    policy: Optional[FuelPolicy] = None,
    basis: Optional[Basis] = None,
    fuel: Optional[int] = None,
) -> DisintegrationResult:
    """
    Disintegration of mu at t within 2 * 2^{-k} by the Tjur-limit search.

    Args:
        mu: Measure on S x T (every point of T assumed Tjur)
        t: Point of T
        k: Precision
        policy: Oracle policy for xi (default: exact with the configured witness bound)
        basis: Continuity basis of the T-marginal (default: certified balls)
        fuel: Search bound handed to basis.containing; levels for dyadic bases (default: default_fuel)

    Raises:
        SearchDiverged: If no basis set around t passes within fuel
        OracleExhausted: If a strict fuel-bounded oracle runs dry
    """
    fuel = get_config().default_fuel if fuel is None else fuel
    policy = policy or FuelPolicy.exact()
    basis = basis or continuity_basis(marginal(mu, 1))
    xi = SeparationEnumeration(mu, basis)
    answer = ec(xi, policy)
    for n in basis.containing(t, fuel):
        if xi.conditional(n) is None:
            continue
        if answer(pair(n, k)) == 0:
            logger.info(f"tjur: B{n} settles {mu.label} at {t.label or 't'} to 2^-{k}")
            return DisintegrationResult(
                measure=xi.conditional(n),
                index=n,
                error=2 * dyadic(k),
                verified=answer.verified,
                method="tjur",
                details={"oracle": policy.describe()},
            )
    raise SearchDiverged(f"no basis set around {t.label or 't'} settles {mu.label} to 2^-{k} within fuel {fuel}")
