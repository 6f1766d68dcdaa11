"""
The Measure eta_x on N x 2^omega - Disintegrator

Pushforward of mu_x along the binary-digit map on the dyadic-free part of
[0,1] (which has full mu_x measure): the cylinder [w] corresponds to the
interval (0.w, 0.w + 2^{-|w|}).

Author: Disintegrator Team
Date: 2026-10-17
"""

from fractions import Fraction
from typing import List

from disintegrator.exact_reals import dyadic
from disintegrator.measures import Pushforward
from disintegrator.spaces import Cantor, Interval, Naturals, ProductSpace, Region
from .mu_x import MuX
from .witness import WitnessTable


def digit_interval(word: str) -> Interval:
    """(0.w, 0.w + 2^{-|w|})"""
    lo = Fraction(int(word, 2), 1 << len(word)) if word else Fraction(0)
    return Interval(lo, lo + dyadic(len(word)))


def eta_x(table: WitnessTable) -> Pushforward:
    """eta_x({k} x [w]) = mu_x({k} x digit_interval(w))."""
    source = MuX(table)

    def preimage(region: Region) -> List[Region]:
        rows, cylinder = region
        return [(rows, digit_interval(cylinder.word))]

    space = ProductSpace([Naturals(), Cantor()])
    eta = Pushforward(source, space, preimage, label=f"eta_x[{table.label}]")
    eta.descriptor = {"type": "construction", "name": "eta_x", "x": table.label}
    return eta
