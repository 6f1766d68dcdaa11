"""
The Measure mu_x on N x [0,1] - Disintegrator

Row n of mu_x has density g_n with respect to Lebesgue measure, where

    f_k(z) = 1 + cos(2^{k+1} pi z),  f_inf = 1
    g_{2m}   = 2^{-m-2} f_{iota(m)}
    g_{2m+1} = 2^{-m-2} (2 - f_{iota(m)})

so the rows sum to 1 pointwise and the second marginal is Lebesgue. The
kernel z -> (g_n(z))_n is the unique continuous disintegration along the
second coordinate.

Row integrals never need iota(m) exactly: over a dyadic interval of
resolution r with iota(m) >= r the integral is the length, and otherwise
the cosine term is below 2^{-(p+2)} once iota(m) > p + 1.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from disintegrator.disintegration import TjurModulus
from disintegrator.exact_reals import (
    PI, LocatedReal, RationalInterval, const, cos_pi_enclosure, div, dyadic, located_sum, scale,
    sin_pi_enclosure, sub,
)
from disintegrator.measures import Basis, Measure, measure_from_basis
from disintegrator.spaces import NatSet, Naturals, PointName, ProductSpace, UnitInterval
from disintegrator.shared.utils import pair, unpair
from .dyadic import DyadicBasis, DyadicInterval
from .witness import WitnessTable

logger = logging.getLogger(__name__)

Iota = Callable[[int], Optional[int]]


# ===== INTEGRALS =====


def resolution(a: Fraction, b: Fraction) -> Optional[int]:
    """Smallest r with a, b in 2^{-r} Z, None unless both are dyadic."""
    r = 0
    for q in (Fraction(a), Fraction(b)):
        d = q.denominator
        if d & (d - 1):
            return None
        r = max(r, d.bit_length() - 1)
    return r


@lru_cache(maxsize=None)
def cos_integral(k: int, a: Fraction, b: Fraction) -> LocatedReal:
    """Integral of cos(2^{k+1} pi z) over (a, b)."""
    freq = 1 << (k + 1)
    if (freq * a).denominator == 1 and (freq * b).denominator == 1:
        return const(0)

    def raw(p: int) -> RationalInterval:
        return sin_pi_enclosure(freq * b, p + 1) - sin_pi_enclosure(freq * a, p + 1)

    return div(LocatedReal(raw, label=f"sin-diff[{k}]"), scale(PI, freq))


def row_integral(table: WitnessTable, m: int, a: Fraction, b: Fraction) -> LocatedReal:
    """Integral of f_{iota(m)} over (a, b), read from the witness table."""
    a, b = Fraction(a), Fraction(b)
    length = b - a
    r = resolution(a, b)
    if r is not None and not table.iota_below(m, r):
        return const(length)

    def raw(p: int) -> RationalInterval:
        k = table.iota(m, p + 1)
        if k is None:
            slack = dyadic(p + 2)
            return RationalInterval(length - slack, length + slack)
        return cos_integral(k, a, b).refine(p + 1) + RationalInterval.point(length)

    return LocatedReal(raw, label=f"int f[{m}]({a}, {b})")


# ===== MEASURE =====


class MuX(Measure):
    """
    mu_x on N x [0,1], computed from a witness table.

    Args:
        table: Witness table y of x
    """

    def __init__(self, table: WitnessTable):
        super().__init__(ProductSpace([Naturals(), UnitInterval()]), f"mu_x[{table.label}]")
        self.table = table
        self.descriptor = {"type": "construction", "name": "mu_x", "x": table.label}
        self._rows = {}

    def row_mass(self, n: int, a: Fraction, b: Fraction) -> LocatedReal:
        """mu_x({n} x (a, b))."""
        key = (n, a, b)
        if key not in self._rows:
            m = n // 2
            weight = dyadic(m + 2)
            integral = row_integral(self.table, m, a, b)
            if n % 2 == 0:
                self._rows[key] = scale(integral, weight)
            else:
                self._rows[key] = scale(sub(const(2 * (b - a)), integral), weight)
        return self._rows[key]

    def _box_mass(self, region: tuple) -> LocatedReal:
        rows, interval = region
        a, b = interval.lo, interval.hi
        if a >= b:
            return const(0)
        if rows.cofinite:
            missing = [self.row_mass(n, a, b) for n in sorted(rows.elements)]
            return sub(const(b - a), located_sum(missing))
        return located_sum([self.row_mass(n, a, b) for n in sorted(rows.elements)])


def mu_x(table: WitnessTable) -> MuX:
    """The measure mu_x of a witness table."""
    return MuX(table)


class RowDyadicBasis(Basis):
    """Boxes {n} x J over the dyadic basis; index <n, j>"""

    def __init__(self):
        self.space = ProductSpace([Naturals(), UnitInterval()])
        self.intervals = DyadicBasis()

    def region_of(self, index: int):
        n, j = unpair(index)
        return (NatSet.of(n), self.intervals.region_of(j))

    def index_of(self, n: int, interval: DyadicInterval) -> int:
        return pair(n, self.intervals.index_of(interval))


def mu_x_on_basis(table: WitnessTable):
    """mu_x rebuilt from its values on finite unions of row boxes."""
    source = MuX(table)
    basis = RowDyadicBasis()

    def values(indices):
        return source.mass_of_regions([basis.region_of(i) for i in sorted(indices)])

    return measure_from_basis(basis, values, label=f"mu_x-basis[{table.label}]")


# ===== CLOSED FORMS =====


def density(iota: Optional[int], n: int, z) -> LocatedReal:
    """g_n(z) for a row whose witness stage is iota (None for infinity)."""
    m = n // 2
    weight = dyadic(m + 2)
    if iota is None:
        f = const(1)
    else:
        freq = 1 << (iota + 1)
        f = LocatedReal(lambda p: cos_pi_enclosure(freq * Fraction(z), p) + RationalInterval.point(1))
    if n % 2 == 0:
        return scale(f, weight)
    return scale(sub(const(2), f), weight)


def kernel_at(iotas: Iota, z) -> Callable[[int], LocatedReal]:
    """n -> g_n(z): the continuous disintegration of mu_x at z."""
    return lambda n: density(iotas(n // 2), n, z)


def nu_at_zero(iotas: Iota, n: int) -> Fraction:
    """g_n(0) exactly: f_k(0) = 2 for finite k."""
    m = n // 2
    f0 = 1 if iotas(m) is None else 2
    return dyadic(m + 2) * (f0 if n % 2 == 0 else 2 - f0)


def iota_modulus(iotas: Iota, basis: Optional[DyadicBasis] = None):
    """
    Tjur modulus of mu_x built from known witness stages.

    locate(t, k) picks a width-2 dyadic interval around t at level
    K + k + 8, where K bounds the finite witness stages of rows m <= k + 3.
    """
    basis = basis or DyadicBasis()

    def locate(t: PointName, k: int) -> int:
        stages = [iotas(m) for m in range(k + 4)]
        level = max([s for s in stages if s is not None], default=0) + k + 8
        q = t.tag(level + 2)
        centre = round(q * (1 << level))
        i = max(0, min(centre - 1, (1 << level) - 2))
        return basis.index_of(DyadicInterval(i, i + 2, level))

    return TjurModulus(locate=locate, basis=basis)
