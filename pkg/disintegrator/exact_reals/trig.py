"""
Rigorous Trigonometric Enclosures - Disintegrator

Rational enclosures of pi (Machin's formula) and of sin(pi q) for rational q.
Arguments are reduced exactly modulo 2 before an alternating Taylor series
with the first omitted term as remainder bound. No floating point is used.

Author: Disintegrator Team
Date: 2026-10-17
"""

from fractions import Fraction
from functools import lru_cache

from .intervals import RationalInterval, dyadic
from .located import LocatedReal


def _arctan_inverse(x: int, p: int) -> RationalInterval:
    """Enclose arctan(1/x) for integer x > 1 to width <= 2^{-p}."""
    total = Fraction(0)
    power = Fraction(1, x)
    k = 0
    while True:
        term = power / (2 * k + 1)
        next_term = power / (x * x) / (2 * k + 3)
        total += term if k % 2 == 0 else -term
        if 2 * next_term <= dyadic(p):
            return RationalInterval(total - next_term, total + next_term)
        power /= x * x
        k += 1


@lru_cache(maxsize=None)
def pi_enclosure(p: int) -> RationalInterval:
    """
    Enclose pi to width <= 2^{-p}.

    pi = 16 arctan(1/5) - 4 arctan(1/239)
    """
    a = _arctan_inverse(5, p + 6).scale(16)
    b = _arctan_inverse(239, p + 5).scale(4)
    return a - b


PI = LocatedReal(pi_enclosure, label="pi")


def _sin_taylor(theta: Fraction, p: int) -> RationalInterval:
    """Enclose sin(theta) for 0 <= theta < 2 to width <= 2^{-p}."""
    total = Fraction(0)
    term = theta
    k = 0
    while True:
        total += term if k % 2 == 0 else -term
        term = term * theta * theta / ((2 * k + 2) * (2 * k + 3))
        k += 1
        if term <= dyadic(p + 1):
            return RationalInterval(total - term, total + term)


def sin_pi_enclosure(q, p: int) -> RationalInterval:
    """
    Enclose sin(pi q) to width <= 2^{-p}.

    Args:
        q: Rational argument (multiple of pi)
        p: Precision

    Returns:
        RationalInterval: Enclosure of sin(pi q)
    """
    r = Fraction(q) % 2
    sign = 1
    if r >= 1:
        sign = -1
        r -= 1
    if r > Fraction(1, 2):
        r = 1 - r
    if r == 0:
        return RationalInterval(0, 0)
    if r == Fraction(1, 2):
        return RationalInterval(sign, sign)

    # theta = r pi in (0, pi/2)
    pi = pi_enclosure(p + 4)
    theta_mid = r * pi.midpoint
    slack = r * pi.width / 2
    scale = 1 << (p + 8)
    theta_round = Fraction(round(theta_mid * scale), scale)
    slack += abs(theta_round - theta_mid)

    series = _sin_taylor(theta_round, p + 3)
    lo = max(series.lo - slack, Fraction(0))
    hi = min(series.hi + slack, Fraction(1))
    enclosure = RationalInterval(lo, hi)
    return enclosure if sign > 0 else -enclosure


def cos_pi_enclosure(q, p: int) -> RationalInterval:
    """Enclose cos(pi q) = sin(pi (q + 1/2)) to width <= 2^{-p}."""
    return sin_pi_enclosure(Fraction(q) + Fraction(1, 2), p)
