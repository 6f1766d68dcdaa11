"""
Realizers and Weihrauch Composition - Disintegrator

A realizer maps a finite input prefix to the output prefix it determines;
longer inputs never retract output. A transform that cannot yet say
anything raises NeedMoreInput. Running a realizer doubles the input
prefix until enough output appears or the demand cap is hit.

Composition shapes:
    strong: H o G o K
    weak:   H o <id, G o K>, pairing by even/odd interleaving

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel

from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import InputDemandExceeded, NeedMoreInput

logger = logging.getLogger(__name__)

Source = Union[Sequence[Any], Callable[[int], Any]]


class TraceRecord(BaseModel):
    """One stage of a realizer run"""
    stage: int
    demanded: int
    emitted: int


class Trace:
    """Stage records of a run, written as JSON lines"""

    def __init__(self):
        self.records: List[TraceRecord] = []

    def add(self, stage: int, demanded: int, emitted: int) -> None:
        self.records.append(TraceRecord(stage=stage, demanded=demanded, emitted=emitted))

    def to_jsonl(self) -> str:
        return "".join(record.model_dump_json() + "\n" for record in self.records)

    def __len__(self) -> int:
        return len(self.records)


def _symbol_at(source: Source, i: int) -> Any:
    if callable(source):
        return source(i)
    return source[i] if i < len(source) else None


class Realizer:
    """
    Prefix-monotone stream transformer.

    Args:
        transform: Input prefix -> output prefix
        label: Optional description
    """

    def __init__(self, transform: Callable[[List[Any]], Sequence[Any]], label: str = ""):
        self._transform = transform
        self.label = label

    def __call__(self, prefix: Sequence[Any]) -> List[Any]:
        return list(self._transform(list(prefix)))

    @classmethod
    def identity(cls) -> "Realizer":
        return cls(lambda prefix: prefix, label="id")

    @classmethod
    def symbolwise(cls, fn: Callable[[Any], Any], label: str = "") -> "Realizer":
        """Apply fn to each input symbol."""
        return cls(lambda prefix: [fn(s) for s in prefix], label=label or getattr(fn, "__name__", "map"))

    def run(
        self,
        source: Source,
        want: int,
        cap: Optional[int] = None,
        initial: Optional[int] = None,
        trace: Optional[Trace] = None,
    ) -> List[Any]:
        """
        Feed doubling prefixes of source until want output symbols exist.

        Args:
            source: Input stream (finite sequences are padded with None)
            want: Output symbols requested
            cap: Largest prefix fed (default: input_demand_cap)
            initial: First prefix length (default: initial_prefix)
            trace: Optional trace receiving one record per stage

        Raises:
            InputDemandExceeded: If the next prefix would exceed the cap
        """
        config = get_config()
        cap = config.input_demand_cap if cap is None else cap
        length = max(1, config.initial_prefix if initial is None else initial)
        prefix: List[Any] = []
        stage = 0
        while True:
            if length > cap:
                raise InputDemandExceeded(
                    f"{self.label or 'realizer'} needs more than {cap} input symbols for {want} outputs"
                )
            prefix.extend(_symbol_at(source, i) for i in range(len(prefix), length))
            demanded = length
            try:
                out = self(prefix)
            except NeedMoreInput as exc:
                out = []
                demanded = max(length, exc.demanded)
            if trace is not None:
                trace.add(stage, length, len(out))
            if len(out) >= want:
                logger.debug(f"{self.label}: {want} outputs from {length} inputs after {stage + 1} stages")
                return out[:want]
            length = max(2 * length, demanded)
            stage += 1

    def __repr__(self) -> str:
        return f"Realizer({self.label})"


def pair_streams(a: Sequence[Any], b: Sequence[Any]) -> List[Any]:
    """Interleave a and b (a at even positions) as far as both are known."""
    out: List[Any] = []
    for i in range(min(len(a), len(b))):
        out.extend((a[i], b[i]))
    if len(a) > len(b):
        out.append(a[len(b)])
    return out


def unpair_stream(c: Sequence[Any]) -> Tuple[List[Any], List[Any]]:
    """Inverse of :func:`pair_streams` on prefixes."""
    return list(c[0::2]), list(c[1::2])


def weihrauch_compose(h: Realizer, k: Realizer, g: Realizer, shape: str = "strong") -> Realizer:
    """
    Compose pre-processor k, oracle realizer g and post-processor h.

    Args:
        h: Post-processor
        k: Pre-processor
        g: Realizer of the reducing problem
        shape: "strong" (h o g o k) or "weak" (h o <id, g o k>)
    """
    if shape == "strong":
        def transform(prefix: List[Any]) -> List[Any]:
            return h(g(k(prefix)))
        label = f"{h.label} o {g.label} o {k.label}"
    elif shape == "weak":
        def transform(prefix: List[Any]) -> List[Any]:
            return h(pair_streams(prefix, g(k(prefix))))
        label = f"{h.label} o <id, {g.label} o {k.label}>"
    else:
        raise ValueError(f"unknown composition shape {shape!r}")
    return Realizer(transform, label=label)
