"""
Modulus-Driven Disintegration - Disintegrator

A Tjur modulus names, for a point t and precision k, a basis set around t
whose conditional is within 2^{-k} of the disintegration at t. Given one,
disintegration is a single conditioning step.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from dataclasses import dataclass
from typing import Callable

from disintegrator.exact_reals import dyadic
from disintegrator.measures import Basis, Measure
from disintegrator.spaces import PointName
from .result import DisintegrationResult
from .tjur import conditional

logger = logging.getLogger(__name__)


@dataclass
class TjurModulus:
    """
    locate(t, k) -> basis index n with t in B(n) and the conditional on B(n)
    within 2^{-k} of the disintegration at t (caller's contract).
    """
    locate: Callable[[PointName, int], int]
    basis: Basis


def trivial_modulus(basis: Basis) -> TjurModulus:
    """Always the first basis element; valid for product measures."""
    return TjurModulus(locate=lambda t, k: 0, basis=basis)


def modulus_disintegrate(mu: Measure, mod: TjurModulus, t: PointName, p: int) -> DisintegrationResult:
    """
    Disintegration of mu at t within 2^{-p}.

    Raises:
        NullConditioningSet: If the located set has no certified mass
    """
    n = mod.locate(t, p + 2)
    logger.debug(f"modulus: {t.label or 't'} at precision {p} located in B{n}")
    return DisintegrationResult(
        measure=conditional(mu, mod.basis.sets(n)),
        index=n,
        error=dyadic(p),
        verified=True,
        method="modulus",
    )
