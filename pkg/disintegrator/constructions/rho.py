"""
The Map rho and Its Faithful Inverse - Disintegrator

rho reads a binary sequence s as an enumeration: k enters at stage N iff
k <= N and the block 0(1^k 0)^p starts at some position p <= N of s.

rho_inverse writes such a sequence for a given enumeration. It starts with
a 1, writes the block for k at the current cursor (sharing the trailing 0
of the previous block as its leading 0), and pads with runs 1^a 0 for the
last emitted a, or with 1s before the first block. Every closed run of 1s
then has a length already enumerated, so s contains 01^k0 only for k in
the enumerated set.

Author: Disintegrator Team
Date: 2026-10-17
"""

import bisect
import logging
import threading
from typing import Callable, List, Optional, Set, Tuple

from disintegrator.oracle_harness import Enumeration

logger = logging.getLogger(__name__)

Bits = Callable[[int], int]


# ===== PATTERNS =====


def pattern_bit(k: int, offset: int) -> int:
    """Bit at offset of the block 0(1^k 0)^p."""
    if offset == 0:
        return 0
    return 1 if (offset - 1) % (k + 1) < k else 0


def pattern_length(k: int, p: int) -> int:
    return 1 + p * (k + 1)


def block_at(s: Bits, k: int, p: int) -> bool:
    """Whether 0(1^k 0)^p starts at position p of s."""
    return all(s(p + o) == pattern_bit(k, o) for o in range(pattern_length(k, p)))


def rho(s: Bits, label: str = "") -> Enumeration:
    """Enumeration read off a sequence by block detection."""

    def source(stage: int) -> Set[int]:
        found = set()
        if any(block_at(s, stage, p) for p in range(stage + 1)):
            found.add(stage)
        found.update(k for k in range(stage) if block_at(s, k, stage))
        return found

    return Enumeration(source, label=label or "rho(s)")


def occurring_runs(word: str) -> Set[int]:
    """All k such that 0 1^k 0 occurs in word."""
    runs = set()
    for i, c in enumerate(word):
        if c != "0":
            continue
        j = i + 1
        while j < len(word) and word[j] == "1":
            j += 1
        if j < len(word):
            runs.add(j - i - 1)
    return runs


# ===== FAITHFUL INVERSE =====


class FaithfulStream:
    """
    Lazily written rho-faithful sequence for an enumeration.

    The output is a list of periodic segments (start, length, k); k None
    stands for a run of 1s. bit(i) writes stages up to i, which always
    leaves at least i + 1 bits.
    """

    def __init__(self, x: Enumeration):
        self.x = x
        self.segments: List[Tuple[int, int, Optional[int]]] = [(0, 1, None)]
        self.starts: List[int] = [0]
        self.length = 1
        self.stage = -1
        self.last: Optional[int] = None
        self.blocks: List[Tuple[int, int]] = []
        self._lock = threading.RLock()

    def _append(self, length: int, k: Optional[int]) -> None:
        if length <= 0:
            return
        start, prev_length, prev_k = self.segments[-1]
        if k is None and prev_k is None:
            self.segments[-1] = (start, prev_length + length, None)
        else:
            self.segments.append((self.length, length, k))
            self.starts.append(self.length)
        self.length += length

    def _write_block(self, k: int) -> None:
        if self.last is None:
            p = self.length
            self._append(1, 0)
        else:
            p = self.length - 1
        self._append(p * (k + 1), k)
        self.blocks.append((k, p))
        self.last = k
        logger.debug(f"block for {k} at position {p}, length now {self.length}")

    def _pad(self, target: int) -> None:
        while self.length < target:
            if self.last is None:
                self._append(target - self.length, None)
            else:
                self._append(self.last + 1, self.last)

    def advance(self, stage: int) -> None:
        """Write everything the enumeration says up to stage."""
        with self._lock:
            while self.stage < stage:
                self.stage += 1
                fresh = self.x.emit(self.stage) - self.x.emit(self.stage - 1)
                for k in sorted(fresh):
                    self._write_block(k)
                self._pad(self.stage + 1)

    def bit(self, i: int) -> int:
        with self._lock:
            if i >= self.length:
                self.advance(i)
            seg = bisect.bisect_right(self.starts, i) - 1
            start, _, k = self.segments[seg]
            if k is None:
                return 1
            return 1 if (i - start) % (k + 1) < k else 0

    def __call__(self, i: int) -> int:
        return self.bit(i)

    def prefix(self, n: int) -> str:
        return "".join(str(self.bit(i)) for i in range(n))


def rho_inverse(x: Enumeration) -> FaithfulStream:
    """A rho-faithful sequence s with rho(s) = x."""
    return FaithfulStream(x)
