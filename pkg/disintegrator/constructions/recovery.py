"""
Recovering x From a Disintegration - Disintegrator

At z = 0 every finite witness stage gives f_k(0) = 2, so the conditional
nu_x at 0 has nu_x{2k} = 2^{-k-1} when x(k) = 1 and 2^{-k-2} otherwise,
i.e. x(k) = 2^{k+2} nu_x{2k} - 1. A bit is decided once an enclosure of
nu_x{2k} falls on one side of the midpoint 3 * 2^{-k-3}.

The reduction pipeline realizes this as H o G o K on enumeration records:
K accumulates records into witness-table columns, G builds mu_x from the
columns and disintegrates at 0, H reads the bits off.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional

from disintegrator.disintegration import tjur_disintegrate
from disintegrator.exact_reals import RationalInterval, dyadic
from disintegrator.measures import Measure
from disintegrator.oracle_harness import Enumeration, FuelPolicy, Realizer, Trace, weihrauch_compose
from disintegrator.shared.exceptions import AmbiguousAtom, NeedMoreInput
from disintegrator.spaces import NatSet, PointName, UnitInterval
from .dyadic import DyadicBasis
from .mu_x import mu_x
from .witness import WitnessTable

logger = logging.getLogger(__name__)


# ===== BITS =====


def scaled_atom(enclosure: RationalInterval, k: int) -> RationalInterval:
    """2^{k+2} nu{2k}: 1 when x(k) = 0, 2 when x(k) = 1."""
    return enclosure.scale(1 << (k + 2))


def recover_bit(enclosure: RationalInterval, k: int) -> int:
    """
    x(k) from an enclosure of nu{2k}.

    Raises:
        AmbiguousAtom: If the enclosure straddles 3 * 2^{-k-3}
    """
    mid = 3 * dyadic(k + 3)
    if enclosure.hi < mid:
        return 0
    if enclosure.lo > mid:
        return 1
    raise AmbiguousAtom(f"nu{{{2 * k}}} enclosure {enclosure} straddles {mid}")


def recover_x(nu: Measure, k_max: int, error: Fraction = Fraction(0)) -> List[int]:
    """
    Bits x(0..k_max-1) from a conditional within error of nu_x on every atom.

    Raises:
        AmbiguousAtom: If error leaves a bit undecided
    """
    bits = []
    for k in range(k_max):
        inner = nu.box_mass(NatSet.of(2 * k)).refine(k + 4)
        bits.append(recover_bit(RationalInterval(inner.lo - error, inner.hi + error), k))
    return bits


# ===== REDUCTION PIPELINE =====


def _columns(records: List[Any]) -> List[frozenset]:
    """K: cumulative columns y(., n) from stage records."""
    out, seen = [], frozenset()
    for record in records:
        seen = seen | frozenset(record or ())
        out.append(seen)
    return out


def _prefix_enumeration(columns: List[frozenset], complete: bool) -> Enumeration:
    """Enumeration known up to len(columns); later stages demand more input unless complete."""

    def source(stage: int):
        if stage < len(columns):
            return columns[stage]
        if complete:
            return columns[-1] if columns else ()
        raise NeedMoreInput(stage + 1, f"stage {stage} past a prefix of {len(columns)} columns")

    return Enumeration(source, label=f"prefix[{len(columns)}]")


@dataclass
class ReductionReport:
    """Outcome of a reduction run"""
    bits: List[int]
    verified: bool
    inputs: int
    stages: List[dict] = field(default_factory=list)


def reduction_realizer(
    k_max: int,
    policy: FuelPolicy,
    complete: bool = False,
    fuel: Optional[int] = None,
) -> Realizer:
    """
    H o G o K for k_max bits.

    Args:
        k_max: Bits recovered
        policy: Oracle policy for the disintegration search
        complete: Treat the input prefix as the whole enumeration
        fuel: Dyadic levels searched around 0
    """
    precision = k_max + 5
    basis = DyadicBasis()
    origin = PointName.exact(UnitInterval(), 0)

    def disintegrate(columns: List[frozenset]) -> List[RationalInterval]:
        table = WitnessTable(_prefix_enumeration(columns, complete))
        result = tjur_disintegrate(mu_x(table), origin, precision, policy=policy, basis=basis, fuel=fuel)
        return [result.atom(2 * k, k + 6) for k in range(k_max)]

    k = Realizer(_columns, label="K")
    g = Realizer(disintegrate, label="G")
    h = Realizer(lambda enclosures: [recover_bit(e, i) for i, e in enumerate(enclosures)], label="H")
    return weihrauch_compose(h, k, g, shape="strong")


def reduce_demo(
    x: Enumeration,
    k_max: int,
    policy: Optional[FuelPolicy] = None,
    fuel: Optional[int] = None,
    trace: Optional[Trace] = None,
) -> ReductionReport:
    """
    Recover x(0..k_max-1) through disintegration at 0.

    Under a fuel-bounded policy the input is cut at the policy's fuel: later
    witnesses are never seen and the report is unverified. The cut prefix is
    a complete enumeration, so its own search runs exact; bit k is 1
    exactly when x enumerates k within the fuel.
    """
    policy = policy or FuelPolicy.exact()
    trace = trace if trace is not None else Trace()
    if policy.verified:
        realizer = reduction_realizer(k_max, policy, fuel=fuel)
        bits = realizer.run(lambda i: tuple(sorted(x.emit(i) - x.emit(i - 1))), want=k_max, trace=trace)
    else:
        records = x.records(policy.fuel + 1)
        realizer = reduction_realizer(k_max, FuelPolicy.exact(), complete=True, fuel=fuel)
        bits = realizer.run(records, want=k_max, initial=len(records), trace=trace)
    logger.info(f"recovered {''.join(map(str, bits))} from {x.label} (verified={policy.verified})")
    return ReductionReport(
        bits=bits,
        verified=policy.verified,
        inputs=trace.records[-1].demanded if len(trace) else 0,
        stages=[r.model_dump() for r in trace.records],
    )
