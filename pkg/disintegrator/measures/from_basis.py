"""
Measures From Basis Values - Disintegrator

Rebuilds a measure from its values on finite unions of basis elements:
mu(U) is the supremum over n of the value of the union of the first n
elements of the decomposition of U. Consistency of the supplied values is
checked only on the unions a query actually touches.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from typing import Callable, Dict, FrozenSet

from disintegrator.exact_reals import LocatedReal, LowerReal, const, located_from_bounds
from disintegrator.shared.exceptions import InconsistentValues, SpaceMismatch
from disintegrator.spaces import OpenSetName, Region, exterior, intersect
from .base import Measure
from .continuity import Basis

logger = logging.getLogger(__name__)

Values = Callable[[FrozenSet[int]], LocatedReal]


class BasisMeasure(Measure):
    """
    Measure known through a continuity basis and the values of finite unions.

    Args:
        basis: Continuity basis
        values: Function (frozenset of basis indices) -> mass of their union
        label: Optional name
    """

    def __init__(self, basis: Basis, values: Values, label: str = ""):
        super().__init__(basis.space, label or "from-basis")
        self.basis = basis
        self._values = values
        self._value_cache: Dict[FrozenSet[int], LocatedReal] = {}
        self._value_lock = threading.Lock()

    def value(self, indices: FrozenSet[int]) -> LocatedReal:
        if not indices:
            return const(0)
        with self._value_lock:
            if indices not in self._value_cache:
                self._value_cache[indices] = self._values(indices)
            return self._value_cache[indices]

    def _check(self, previous: FrozenSet[int], current: FrozenSet[int], n: int) -> None:
        """Monotonicity and, for one disjoint new element, additivity."""
        before, after = self.value(previous).refine(n), self.value(current).refine(n)
        if after.hi < before.lo:
            raise InconsistentValues(
                f"{self.label}: value of {sorted(current)} is below value of its subset {sorted(previous)}"
            )
        added = current - previous
        if len(added) != 1 or not previous:
            return
        (fresh,) = added
        region = self.basis.region_of(fresh)
        if region is None:
            return
        if all(intersect(region, r) is None for r in map(self.basis.region_of, previous) if r is not None):
            alone = self.value(frozenset(added)).refine(n + 1)
            if (before + alone).intersect(after) is None:
                raise InconsistentValues(
                    f"{self.label}: values not additive on disjoint union {sorted(previous)} + {fresh}"
                )

    def eval(self, U: OpenSetName) -> LowerReal:
        if U.space != self.space:
            raise SpaceMismatch(f"{self.label} lives on {self.space}, open set on {U.space}")
        decomposition = self.basis.decompose(U)
        state = {"last": frozenset()}
        lock = threading.Lock()

        def raw(n: int):
            chosen = frozenset(decomposition.indices(n))
            with lock:
                previous = state["last"]
                if previous <= chosen and previous != chosen:
                    self._check(previous, chosen, n)
                    state["last"] = chosen
            return self.value(chosen).refine(n).lo if chosen else 0

        return LowerReal(raw, label=f"{self.label}({U.label})")

    def _box_mass(self, region: Region) -> LocatedReal:
        # valid for regions whose boundary is null
        inner = self.eval(OpenSetName.finite(self.space, [region]))
        outer = self.eval(OpenSetName.finite(self.space, exterior(region, self.space.whole)))
        return located_from_bounds(inner, outer.complement(1), label=f"{self.label}[box]")


def measure_from_basis(b: Basis, values: Values, label: str = "") -> BasisMeasure:
    """Measure from values on finite unions of basis elements."""
    return BasisMeasure(b, values, label)


def values_of(mu: Measure, b: Basis) -> Values:
    """Basis values read off a known measure."""
    def values(indices: FrozenSet[int]) -> LocatedReal:
        return mu.mass_of_regions([b.region_of(i) for i in indices if b.region_of(i) is not None])
    return values
