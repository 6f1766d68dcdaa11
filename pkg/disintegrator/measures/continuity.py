"""
Continuity Sets - Disintegrator

A continuity-set name pairs an open set U with a witness V inside the
complement of U whose measure is 1 - mu(U); together they give two-sided
enclosures of mu(U). This module also certifies radii whose spheres carry
negligible mass and builds bases of continuity balls from them.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterator, List, Optional, Sequence

from disintegrator.exact_reals import LocatedReal, dyadic, located_from_bounds
from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import CertificateTimeout, SpaceMismatch
from disintegrator.shared.utils import unpair
from disintegrator.spaces import (
    MetricSpace, OpenSetName, PointName, ProductSpace, Region, exterior, intersect, intersect_opens,
    member, product_open, subset, union_opens,
)
from .base import Measure

logger = logging.getLogger(__name__)


# ===== CONTINUITY-SET NAMES =====


@dataclass(frozen=True)
class ContinuitySetName:
    """
    Open set u with a witness v for the interior of its complement.

    region is the basic region u names when there is one; measures then
    answer mu(U) as a box mass.
    """
    u: OpenSetName
    v: OpenSetName
    label: str = ""
    region: Optional[Region] = None

    @property
    def space(self) -> MetricSpace:
        return self.u.space

    @classmethod
    def from_region(cls, space: MetricSpace, region: Optional[Region], label: str = "") -> "ContinuitySetName":
        """Basic open region with the exterior as witness."""
        if region is None:
            return cls.whole(space).complement()
        return cls(
            OpenSetName.finite(space, [region], label=label or "region"),
            OpenSetName.finite(space, exterior(region, space.whole), label="exterior"),
            label=label,
            region=region,
        )

    @classmethod
    def whole(cls, space: MetricSpace) -> "ContinuitySetName":
        return cls(OpenSetName.whole(space), OpenSetName.empty(space), label="whole", region=space.whole)

    def complement(self) -> "ContinuitySetName":
        return ContinuitySetName(self.v, self.u, label=f"~{self.label}")


def cset_measure(mu: Measure, h: ContinuitySetName, max_stage: Optional[int] = None) -> LocatedReal:
    """
    mu(U) squeezed between eval(u) and 1 - eval(v).

    Raises:
        SpaceMismatch: If h lives in another space
        WitnessInconsistent: If a lower bound exceeds an upper bound (on refinement)
    """
    if h.space != mu.space:
        raise SpaceMismatch(f"continuity set in {h.space}, measure on {mu.space}")
    if h.region is not None:
        return mu.box_mass(h.region)
    return located_from_bounds(
        mu.eval(h.u), mu.eval(h.v).complement(1), max_stage=max_stage,
        label=f"{mu.label}[{h.label}]",
    )


def _product_space(h1: ContinuitySetName, h2: ContinuitySetName, space: Optional[ProductSpace]) -> ProductSpace:
    space = space or ProductSpace([h1.space, h2.space])
    if list(space.factors) != [h1.space, h2.space]:
        raise SpaceMismatch(f"{space} is not {h1.space} x {h2.space}")
    return space


def cset_algebra(
    op: str,
    h1: ContinuitySetName,
    h2: Optional[ContinuitySetName] = None,
    space: Optional[ProductSpace] = None,
) -> ContinuitySetName:
    """
    Combine continuity-set names.

    Args:
        op: One of intersect, union, product, complement_witness
        h1: First operand
        h2: Second operand (not used by complement_witness)
        space: Target space for product (defaults to h1.space x h2.space)

    Raises:
        SpaceMismatch: If the operands are incompatible
    """
    if op == "complement_witness":
        return h1.complement()
    if h2 is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "intersect":
        region = None
        if h1.space == h2.space and h1.region is not None and h2.region is not None:
            region = intersect(h1.region, h2.region)
        return ContinuitySetName(
            intersect_opens(h1.u, h2.u), union_opens([h1.v, h2.v]),
            label=f"({h1.label}&{h2.label})", region=region,
        )
    if op == "union":
        if h1.space != h2.space:
            raise SpaceMismatch(f"union of {h1.space} and {h2.space}")
        return ContinuitySetName(
            union_opens([h1.u, h2.u]), intersect_opens(h1.v, h2.v),
            label=f"({h1.label}|{h2.label})",
        )
    if op == "product":
        space = _product_space(h1, h2, space)
        witness = union_opens([
            product_open(h1.v, h2.u, space),
            product_open(h1.u, h2.v, space),
            product_open(h1.v, h2.v, space),
        ])
        region = None
        if h1.region is not None and h2.region is not None:
            region = (h1.region, h2.region)
        return ContinuitySetName(
            product_open(h1.u, h2.u, space), witness, label=f"({h1.label}x{h2.label})", region=region,
        )
    raise ValueError(f"unknown continuity-set operation {op!r}")


# ===== CERTIFIED RADII =====


def dyadic_radii() -> Iterator[Fraction]:
    """1, 1/2, 1/4, 3/4, 1/8, 3/8, ...: smallest denominator, then numerator."""
    yield Fraction(1)
    level = 1
    while True:
        for numerator in range(1, 1 << level, 2):
            yield Fraction(numerator, 1 << level)
        level += 1


@dataclass(frozen=True)
class CertifiedRadius:
    """Radius with an annulus-mass certificate"""
    radius: Fraction
    stage: int
    centres: tuple
    annulus: Fraction  # certified upper bound, < 2^-stage


class RadiusStream:
    """
    Dense stream of radii whose spheres around the given centres are null
    up to 2^{-stage}.

    Emission i runs at stage certification_stage + i. Candidates are tried
    in :func:`dyadic_radii` order, skipping ones already emitted; the
    annulus around each sphere has half-width 2^{-(stage+3)}. The candidate
    budget starts at 16 and doubles up to witness_fuel_doublings times.

    Args:
        mu: Measure
        centres: Dense indices of the centres to certify (default: 0..i at emission i)
    """

    def __init__(self, mu: Measure, centres: Optional[Sequence[int]] = None):
        self.mu = mu
        self.centres = None if centres is None else tuple(centres)
        self._emitted: List[CertifiedRadius] = []
        self._lock = threading.Lock()

    def annulus_bound(self, centre: int, radius: Fraction, stage: int) -> Optional[Fraction]:
        """Certified upper bound on mu(B(c, r + eta) minus B(c, r - eta)), None if r <= eta."""
        eta = dyadic(stage + 3)
        if radius <= eta:
            return None
        space = self.mu.space
        tag = space.dense(centre)
        outer = self.mu.box_mass(space.ball_region(tag, radius + eta)).refine(stage + 3)
        inner = self.mu.box_mass(space.ball_region(tag, radius - eta)).refine(stage + 3)
        return outer.hi - inner.lo

    def _certify(self, radius: Fraction, stage: int, centres: tuple) -> Optional[Fraction]:
        worst = Fraction(0)
        for centre in centres:
            bound = self.annulus_bound(centre, radius, stage)
            if bound is None or bound >= dyadic(stage):
                return None
            worst = max(worst, bound)
        return worst

    def _emit_next(self) -> CertifiedRadius:
        config = get_config()
        i = len(self._emitted)
        stage = config.certification_stage + i
        centres = self.centres if self.centres is not None else tuple(range(i + 1))
        used = {r.radius for r in self._emitted}
        budget = 16
        for _ in range(config.witness_fuel_doublings + 1):
            for count, radius in enumerate(dyadic_radii()):
                if count >= budget:
                    break
                if radius in used:
                    continue
                annulus = self._certify(radius, stage, centres)
                if annulus is not None:
                    return CertifiedRadius(radius, stage, centres, annulus)
            logger.debug(f"no radius certified at stage {stage} within {budget} candidates, retrying")
            budget *= 2
        raise CertificateTimeout(f"no continuity radius for {self.mu.label} at stage {stage}")

    def __call__(self, i: int) -> CertifiedRadius:
        with self._lock:
            while len(self._emitted) <= i:
                self._emitted.append(self._emit_next())
            return self._emitted[i]

    def radius(self, i: int) -> Fraction:
        return self(i).radius


def continuity_radii(mu: Measure, centres: Optional[Sequence[int]] = None) -> RadiusStream:
    """Certified continuity radii for mu (see :class:`RadiusStream`)."""
    return RadiusStream(mu, centres)


# ===== CONTINUITY BASES =====


class Basis(ABC):
    """
    Enumerated basis of continuity sets.

    Subclasses give the region of each index; the atoms of a basis (codes
    mapped by :meth:`atom_index`) are the elements decompositions draw from.
    """

    space: MetricSpace

    @abstractmethod
    def region_of(self, index: int) -> Optional[Region]:
        """Region of basis element index, None when empty."""

    def atom_index(self, code: int) -> int:
        return code

    def sets(self, index: int) -> ContinuitySetName:
        """Basis element with its exterior witness."""
        return ContinuitySetName.from_region(self.space, self.region_of(index), label=f"B{index}")

    def decompose(self, U: OpenSetName) -> "Decomposition":
        if U.space != self.space:
            raise SpaceMismatch(f"basis on {self.space}, open set on {U.space}")
        return Decomposition(self, U)

    def union_of(self, indices: Sequence[int]) -> OpenSetName:
        """Open name of the union of the given basis elements."""
        regions = [self.region_of(i) for i in indices]
        return OpenSetName.finite(self.space, [r for r in regions if r is not None], label="basis-union")

    def refinements(self, index: int) -> Iterator[int]:
        """Indices of other elements contained in element index."""
        outer = self.region_of(index)
        m = 0
        while outer is not None:
            if m != index:
                inner = self.region_of(m)
                if inner is not None and subset(inner, outer):
                    yield m
            m += 1

    def containing(self, t: PointName, fuel: int) -> Iterator[int]:
        """Indices up to fuel whose element certifiably contains t, in order."""
        for n in range(fuel + 1):
            if member(t, self.sets(n).u, fuel):
                yield n


class ContinuityBasis(Basis):
    """
    Countable basis of continuity sets made of certified balls.

    Singleton code c = <j, i> is the ball around dense point j with the i-th
    radius certified for centre j. Basis index 2c is that ball; index 2c+1
    is the intersection of the balls whose codes are the 1-bits of c+1.

    Args:
        mu: Measure the balls are certified for
    """

    def __init__(self, mu: Measure):
        self.mu = mu
        self.space = mu.space
        self._radii: Dict[int, RadiusStream] = {}
        self._lock = threading.Lock()

    def radii_for(self, centre: int) -> RadiusStream:
        with self._lock:
            if centre not in self._radii:
                self._radii[centre] = RadiusStream(self.mu, [centre])
            return self._radii[centre]

    def ball_region(self, code: int) -> Optional[Region]:
        centre, i = unpair(code)
        return self.space.ball_region(self.space.dense(centre), self.radii_for(centre).radius(i))

    def atom_index(self, code: int) -> int:
        return 2 * code

    def codes_of(self, index: int) -> List[int]:
        """Singleton codes whose balls intersect to basis element index."""
        if index % 2 == 0:
            return [index // 2]
        mask = (index - 1) // 2 + 1
        return [bit for bit in range(mask.bit_length()) if mask >> bit & 1]

    def region_of(self, index: int) -> Optional[Region]:
        regions = [self.ball_region(code) for code in self.codes_of(index)]
        if any(r is None for r in regions):
            return None
        return reduce(lambda a, b: None if a is None else intersect(a, b), regions[1:], regions[0])


class Decomposition:
    """
    Greedy right inverse of the basis union: item <e, c> is the index of
    basis atom c when its region lies inside entry e of U, else None.
    """

    def __init__(self, basis: Basis, U: OpenSetName):
        self.basis = basis
        self.U = U

    def __call__(self, n: int) -> Optional[int]:
        e, code = unpair(n)
        entry = self.U.region_of(self.U.entry(e))
        if entry is None:
            return None
        index = self.basis.atom_index(code)
        region = self.basis.region_of(index)
        if region is None or not subset(region, entry):
            return None
        return index

    def indices(self, n: int) -> List[int]:
        """Distinct basis indices among the first n items, in order."""
        seen: List[int] = []
        for m in range(n):
            index = self(m)
            if index is not None and index not in seen:
                seen.append(index)
        return seen


def continuity_basis(mu: Measure) -> ContinuityBasis:
    """Basis of certified continuity balls for mu."""
    return ContinuityBasis(mu)
