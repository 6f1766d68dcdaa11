"""
Limits in Baire and Cantor Space - Disintegrator

Lim on 2^omega: for a fast-Cauchy stream of points (consecutive terms
agree on bits 0..n) bit i of the limit is bit i of term i+2. Breaches of
the bound are detected on the pairs each query reads.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from functools import lru_cache
from typing import Callable

from disintegrator.shared.exceptions import CauchyViolation

logger = logging.getLogger(__name__)

Bits = Callable[[int], int]


def _check_pair(seq: Callable[[int], Bits], n: int) -> None:
    first, second = seq(n), seq(n + 1)
    for i in range(n + 1):
        if first(i) != second(i):
            raise CauchyViolation(f"terms {n} and {n + 1} differ at bit {i}, bound is 2^-{n}")


def lim_baire(seq: Callable[[int], Bits], check_prefix: int = 4) -> Bits:
    """
    Limit of a fast-Cauchy stream of Cantor points given as bit functions.

    Args:
        seq: n -> bit function of the n-th term
        check_prefix: Pairs checked eagerly before any bit is read

    Raises:
        CauchyViolation: When a checked pair breaks the bound
    """
    for n in range(check_prefix):
        _check_pair(seq, n)

    @lru_cache(maxsize=None)
    def bit(i: int) -> int:
        _check_pair(seq, i + 1)
        return 1 if seq(i + 2)(i) else 0

    return bit
