"""
The Mixture Measure on N x C - Disintegrator

C = 2^omega x 2^omega with points (u, s). The mixture is

    mu(A x [u] x [w]) = integral over s in [w] of eta_{rho(s)}(A x [u])

where rho reads s as an enumeration. On a row n = 2m or 2m + 1 the
integrand depends on s only through iota(m) = max(m, p*), with p* the
first position carrying the block 0(1^m 0)^p, and the cosine term vanishes
over I_u once iota(m) >= |u|. The first-occurrence law of p* inside [w] is
computed exactly below a horizon by pruned inclusion-exclusion over block
positions; positions from the horizon up to |u| are enclosed by the union
bound. The horizon doubles until the enclosure is tight enough.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, Optional, Tuple

from disintegrator.exact_reals import (
    LocatedReal, RationalInterval, const, div, dyadic, located_sum, scale, sub,
)
from disintegrator.measures import Measure
from disintegrator.shared.config import get_config
from disintegrator.spaces import ALL_NATURALS, Cylinder, NatSet, Region, naturals_times_pair
from .eta_x import digit_interval
from .mu_x import cos_integral
from .rho import pattern_bit, pattern_length

logger = logging.getLogger(__name__)

Constraints = Dict[int, int]


# ===== FIRST OCCURRENCE =====


def _merge(word: str, constraints: Constraints, m: int, p: int) -> Optional[Constraints]:
    """Constraints plus the block for m at p, None on a conflict."""
    merged = dict(constraints)
    for o in range(pattern_length(m, p)):
        pos, bit = p + o, pattern_bit(m, o)
        if pos < len(word):
            if int(word[pos]) != bit:
                return None
        elif merged.setdefault(pos, bit) != bit:
            return None
    return merged


def _probability(word: str, constraints: Constraints) -> Fraction:
    """lambda of [word] cut down by constraints beyond it."""
    return dyadic(len(word) + len(constraints))


def first_occurrence(m: int, word: str, horizon: int) -> Dict[int, Fraction]:
    """
    lambda([word] and p* = p) for block positions p below horizon.

    Inclusion-exclusion over sets S of positions, grouped by max S; sets
    whose blocks conflict (with word or each other) contribute nothing and
    neither do their supersets.
    """
    law: Dict[int, Fraction] = {p: Fraction(0) for p in range(horizon)}

    def walk(start: int, constraints: Constraints, size: int) -> None:
        for p in range(start, horizon):
            merged = _merge(word, constraints, m, p)
            if merged is None:
                continue
            sign = 1 if size % 2 == 0 else -1
            law[p] += sign * _probability(word, merged)
            walk(p + 1, merged, size + 1)

    walk(0, {}, 0)
    return law


def union_bound(m: int, word: str, lo: int, hi: int) -> Fraction:
    """Sum over p in [lo, hi) of lambda([word] and block for m at p)."""
    total = Fraction(0)
    for p in range(lo, hi):
        merged = _merge(word, {}, m, p)
        if merged is not None:
            total += _probability(word, merged)
    return total


# ===== MEASURE =====


class Mixture(Measure):
    """
    The mixture of eta_{rho(s)} over s, on N x C.

    Args:
        horizon: First inclusion-exclusion horizon (default: mixture_initial_horizon)
    """

    def __init__(self, horizon: Optional[int] = None):
        super().__init__(naturals_times_pair(), "mixture")
        self.horizon = horizon or get_config().mixture_initial_horizon
        self.descriptor = {"type": "construction", "name": "mixture"}
        self._laws: Dict[Tuple[int, str, int], Dict[int, Fraction]] = {}
        self._rows: Dict[Tuple[int, str, str], LocatedReal] = {}
        self._law_lock = threading.Lock()

    def law(self, m: int, word: str, horizon: int) -> Dict[int, Fraction]:
        """lambda([word] and iota(m) = N) for N below horizon."""
        key = (m, word, horizon)
        with self._law_lock:
            if key not in self._laws:
                occurrence = first_occurrence(m, word, horizon)
                law = {N: Fraction(0) for N in range(horizon)}
                if m < horizon:
                    law[m] = sum((occurrence[p] for p in range(m + 1)), Fraction(0))
                    for N in range(m + 1, horizon):
                        law[N] = occurrence[N]
                self._laws[key] = law
            return self._laws[key]

    def row_mass(self, n: int, u: str, w: str) -> LocatedReal:
        """mu({n} x [u] x [w])."""
        key = (n, u, w)
        if key not in self._rows:
            self._rows[key] = self._row_mass(n, u, w)
        return self._rows[key]

    def _row_mass(self, n: int, u: str, w: str) -> LocatedReal:
        m = n // 2
        weight = dyadic(m + 2)
        depth = len(u)
        flat = dyadic(len(w) + depth)
        if m >= depth:
            return const(weight * flat)
        sign = 1 if n % 2 == 0 else -1
        cell = digit_interval(u)

        def raw(p: int) -> RationalInterval:
            horizon = min(self.horizon, depth)
            while True:
                lo = horizon if m < horizon else 0
                tail = union_bound(m, w, lo, depth) if horizon < depth else Fraction(0)
                slack = weight * tail * dyadic(depth)
                if slack <= dyadic(p + 2) or horizon >= depth:
                    break
                horizon = min(2 * horizon, depth)
            law = self.law(m, w, horizon)
            terms = [scale(cos_integral(N, cell.lo, cell.hi), mass) for N, mass in law.items() if mass]
            wave = located_sum(terms).refine(p + 2) if terms else RationalInterval.point(0)
            centre = (RationalInterval.point(flat) + wave.scale(sign)).scale(weight)
            return RationalInterval(centre.lo - slack, centre.hi + slack)

        return LocatedReal(raw, label=f"mixture[{n}]({u}, {w})")

    def _box_mass(self, region: Region) -> LocatedReal:
        rows, (first, second) = region
        u, w = first.word, second.word
        if rows.cofinite:
            missing = [self.row_mass(n, u, w) for n in sorted(rows.elements)]
            return sub(const(dyadic(len(u) + len(w))), located_sum(missing))
        return located_sum([self.row_mass(n, u, w) for n in sorted(rows.elements)])


def mixture(horizon: Optional[int] = None) -> Mixture:
    return Mixture(horizon)


def cell_ratio(mu: Mixture, rows: NatSet, u: str, w: str) -> LocatedReal:
    """mu(rows x [u] x [w]) / mu(N x [u] x [w])."""
    cell = (Cylinder(u), Cylinder(w))
    return div(mu.box_mass((rows, cell)), mu.box_mass((ALL_NATURALS, cell)))
