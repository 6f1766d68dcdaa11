"""
Prokhorov Distance - Disintegrator

Exact Prokhorov distance between finitely supported measures.

For a threshold t let F(t) be the maximum flow from the atoms of mu to the
atoms of nu along edges d(a, b) <= t (source and sink capacities are the
weights). The deficiency D(t) = 1 - F(t) equals sup_A mu(A) - nu(A^eps) for
every eps in (t, t'] between consecutive critical distances, so

    d_P(mu, nu) = min(1, min_k max(t_k, D(t_k)))

over the sorted distinct pairwise distances t_k. D is nonincreasing, so the
minimum sits at the first k with t_k >= D(t_k), found by bisection.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import math
from fractions import Fraction
from typing import List

import networkx as nx

from disintegrator.exact_reals import LocatedReal, const
from disintegrator.shared.exceptions import SpaceMismatch
from .standard import FiniteDiscreteMeasure

logger = logging.getLogger(__name__)

SOURCE = "source"
SINK = "sink"


def _scale_of(mu: FiniteDiscreteMeasure, nu: FiniteDiscreteMeasure) -> int:
    denominators = [w.denominator for _, w in mu.atoms + nu.atoms]
    return math.lcm(*denominators)


def deficiency(mu: FiniteDiscreteMeasure, nu: FiniteDiscreteMeasure, threshold: Fraction) -> Fraction:
    """
    1 - (max flow of mass from mu to nu over pairs at distance <= threshold).

    Capacities are scaled to integers so the flow value is exact.
    """
    scale = _scale_of(mu, nu)
    graph = nx.DiGraph()
    for i, (_, w) in enumerate(mu.atoms):
        graph.add_edge(SOURCE, ("mu", i), capacity=int(w * scale))
    for j, (_, w) in enumerate(nu.atoms):
        graph.add_edge(("nu", j), SINK, capacity=int(w * scale))
    for i, (a, _) in enumerate(mu.atoms):
        for j, (b, _) in enumerate(nu.atoms):
            if mu.space.distance(a, b) <= threshold:
                graph.add_edge(("mu", i), ("nu", j))  # no capacity attribute: unbounded
    flow = nx.maximum_flow_value(graph, SOURCE, SINK)
    return 1 - Fraction(flow, scale)


def prokhorov_exact(mu: FiniteDiscreteMeasure, nu: FiniteDiscreteMeasure) -> Fraction:
    """
    Exact Prokhorov distance as a rational.

    Raises:
        SpaceMismatch: If the measures live on different spaces
    """
    if mu.space != nu.space:
        raise SpaceMismatch(f"prokhorov between {mu.space} and {nu.space}")
    critical: List[Fraction] = sorted({
        mu.space.distance(a, b) for a, _ in mu.atoms for b, _ in nu.atoms
    })
    cache = {}

    def deficiency_at(k: int) -> Fraction:
        if k < 0:
            return Fraction(1)
        if k not in cache:
            cache[k] = deficiency(mu, nu, critical[k])
        return cache[k]

    lo, hi = 0, len(critical) - 1  # the complete graph carries all the mass: D(t_last) = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if critical[mid] >= deficiency_at(mid):
            hi = mid
        else:
            lo = mid + 1
    value = min(Fraction(1), critical[lo], deficiency_at(lo - 1))
    logger.debug(f"prokhorov({mu.label}, {nu.label}) = {value} after {len(cache)} flow solves")
    return value


def prokhorov(mu: FiniteDiscreteMeasure, nu: FiniteDiscreteMeasure) -> LocatedReal:
    """Prokhorov distance between two finite-discrete measures as a located real."""
    value = prokhorov_exact(mu, nu)
    result = const(value)
    result.label = f"d_P({mu.label}, {nu.label})"
    return result
