"""
Enumerations - Disintegrator

An enumeration names a set of naturals (a point of C(N, S)) by the finite
sets emitted so far at each stage. Emissions are cumulative: emit(n) is
contained in emit(n+1), and m belongs to the named set iff some stage
emits it.

The replayable encoding is a stream of stage records: record n lists the
elements first emitted at stage n (an empty record is padding).

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import threading
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class Enumeration:
    """
    Monotone stream of finite sets of naturals.

    Args:
        source: Function stage -> elements known at that stage (made cumulative here)
        label: Optional description
    """

    def __init__(self, source: Callable[[int], Iterable[int]], label: str = ""):
        self._source = source
        self.label = label
        self._cache: Dict[int, FrozenSet[int]] = {}
        self._lock = threading.RLock()

    def emit(self, n: int) -> FrozenSet[int]:
        """Elements enumerated by stage n."""
        if n < 0:
            return frozenset()
        with self._lock:
            if n not in self._cache:
                start = max((m for m in self._cache if m < n), default=-1)
                current = self._cache.get(start, frozenset())
                for stage in range(start + 1, n + 1):
                    current = current | frozenset(self._source(stage))
                    self._cache[stage] = current
            return self._cache[n]

    def member_at(self, m: int, n: int) -> bool:
        """Whether m is enumerated by stage n."""
        return m in self.emit(n)

    def first_stage(self, m: int, fuel: int) -> Optional[int]:
        """Stage at which m first appears, None if not by fuel."""
        for n in range(fuel + 1):
            if self.member_at(m, n):
                return n
        return None

    def records(self, n: int) -> List[Tuple[int, ...]]:
        """Stage records 0..n-1: the elements new at each stage, sorted."""
        out = []
        seen: FrozenSet[int] = frozenset()
        for stage in range(n):
            current = self.emit(stage)
            out.append(tuple(sorted(current - seen)))
            seen = current
        return out

    def prefix_bits(self, n: int, stage: int) -> List[int]:
        """Characteristic bits 0..n-1 as known at the given stage."""
        known = self.emit(stage)
        return [1 if m in known else 0 for m in range(n)]

    @classmethod
    def empty(cls) -> "Enumeration":
        return cls(lambda n: (), label="empty")

    @classmethod
    def from_bits(cls, bits: Sequence[int], stages: Optional[Sequence[int]] = None) -> "Enumeration":
        """
        Enumerate {k : bits[k] = 1}.

        Args:
            bits: Characteristic prefix (positions beyond it are 0)
            stages: Witness stage per position (default: stage k for position k)
        """
        bits = [1 if b else 0 for b in bits]
        stages = list(range(len(bits))) if stages is None else list(stages)
        if len(stages) < len(bits):
            raise ValueError(f"{len(bits)} bits but only {len(stages)} witness stages")
        witnesses = [(k, stages[k]) for k, b in enumerate(bits) if b]
        label = "".join(map(str, bits))
        return cls.from_witnesses(witnesses, label=label or "empty")

    @classmethod
    def from_witnesses(cls, witnesses: Iterable[Tuple[int, int]], label: str = "") -> "Enumeration":
        """Enumerate each m at its witness stage n, given as (m, n) pairs."""
        by_stage: Dict[int, List[int]] = {}
        for m, n in witnesses:
            if m < 0 or n < 0:
                raise ValueError(f"witness ({m}, {n}) is not a pair of naturals")
            by_stage.setdefault(n, []).append(m)
        return cls(lambda n: by_stage.get(n, ()), label=label or "witnesses")

    @classmethod
    def from_records(cls, records: Sequence[Iterable[int]], label: str = "") -> "Enumeration":
        """Replay a finite record prefix; later stages emit nothing."""
        frozen = [tuple(r) for r in records]
        return cls(lambda n: frozen[n] if n < len(frozen) else (), label=label or "records")

    def __repr__(self) -> str:
        return f"Enumeration({self.label})"
