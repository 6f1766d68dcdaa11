"""
Measure Base Class - Disintegrator

Abstract interface for Borel probability measures on the computable metric
spaces of this package. A measure answers exact enclosures for the mass of
basic regions; the valuation on open-set names is derived from those:
eval(U) at stage n is the lower end of the stage-n enclosure of the mass of
the union of the first n entries of U.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Optional

from disintegrator.exact_reals import LocatedReal, LowerReal, const, located_sum
from disintegrator.shared.exceptions import SpaceMismatch
from disintegrator.spaces import MetricSpace, OpenSetName, Region, disjointify, is_empty

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Valuation:
    """Lower-semicontinuous map from open-set names to lower reals"""
    space: MetricSpace
    eval: Callable[[OpenSetName], LowerReal]

    def __call__(self, U: OpenSetName) -> LowerReal:
        return self.eval(U)


class Measure(ABC):
    """
    Abstract base class for probability measures.

    Subclasses implement ``_box_mass`` for nonempty basic regions of their
    space; results are cached per region.

    Args:
        space: Ambient metric space
        label: Human-readable name used in logs and reports
    """

    def __init__(self, space: MetricSpace, label: str = ""):
        self.space = space
        self.label = label or type(self).__name__
        self.descriptor: Optional[Dict[str, Any]] = None
        self._box_cache: Dict[Any, LocatedReal] = {}
        self._lock = threading.RLock()

    @abstractmethod
    def _box_mass(self, region: Region) -> LocatedReal:
        """Mass of a nonempty basic region."""

    def box_mass(self, region: Optional[Region]) -> LocatedReal:
        """
        Mass of a basic region as a located real.

        Args:
            region: Basic region of the space (None stands for the empty set)
        """
        if region is None or is_empty(region):
            return const(0)
        with self._lock:
            hit = self._box_cache.get(region)
            if hit is None:
                hit = self._box_mass(region)
                self._box_cache[region] = hit
            return hit

    def mass_of_regions(self, regions: Iterable[Region]) -> LocatedReal:
        """Mass of a finite union of basic regions."""
        pieces = disjointify([r for r in regions if r is not None])
        if not pieces:
            return const(0)
        if len(pieces) == 1:
            return self.box_mass(pieces[0])
        return located_sum(self.box_mass(p) for p in pieces)

    def eval(self, U: OpenSetName) -> LowerReal:
        """
        Lower approximations of the measure of an open set.

        Args:
            U: Open-set name over this measure's space

        Raises:
            SpaceMismatch: If U lives in another space
        """
        if U.space != self.space:
            raise SpaceMismatch(f"{self.label} lives on {self.space}, open set on {U.space}")

        def raw(n: int):
            regions = U.regions(n)
            if not regions:
                return 0
            return self.mass_of_regions(regions).refine(n).lo

        return LowerReal(raw, label=f"{self.label}({U.label})")

    @property
    def valuation(self) -> Valuation:
        return Valuation(self.space, self.eval)

    def total(self) -> LocatedReal:
        return self.box_mass(self.space.whole)

    def describe(self) -> Dict[str, Any]:
        """Closed-form descriptor for reports"""
        return self.descriptor or {"type": type(self).__name__, "label": self.label}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"


def eval_valuation(mu: Measure, U: OpenSetName) -> LowerReal:
    """Evaluate the valuation of mu on an open-set name."""
    return mu.eval(U)
