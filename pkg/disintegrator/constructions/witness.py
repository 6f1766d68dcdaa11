"""
Witness Tables - Disintegrator

y(m, n) = 1 iff m is enumerated by stage n, so every row is nondecreasing
and iota(m) = inf{n : y(m, n) = 1} is the witness stage of m (infinite when
m is never enumerated).

Author: Disintegrator Team
Date: 2026-10-17
"""

from typing import Callable, Dict, Optional

from disintegrator.oracle_harness import Enumeration


class WitnessTable:
    """
    Nondecreasing 0/1 table read off an enumeration.

    Args:
        x: Enumeration the table witnesses
    """

    def __init__(self, x: Enumeration):
        self.x = x
        self.label = x.label

    def __call__(self, m: int, n: int) -> int:
        return 1 if self.x.member_at(m, n) else 0

    def iota(self, m: int, fuel: int) -> Optional[int]:
        """Witness stage of m, None when it exceeds fuel (iota(m) > fuel)."""
        return self.x.first_stage(m, fuel)

    def iota_below(self, m: int, r: int) -> bool:
        """Whether iota(m) < r; decidable from y(m, r - 1)."""
        return r > 0 and self(m, r - 1) == 1

    @classmethod
    def from_iota(cls, stages: Dict[int, int], label: str = "") -> "WitnessTable":
        """Table whose finite witness stages are given explicitly."""
        return cls(Enumeration.from_witnesses(stages.items(), label=label or "iota"))


def witness_table(x: Enumeration) -> WitnessTable:
    """y(m, n) = [m in emit(n)]."""
    return WitnessTable(x)


def iota_of(table: WitnessTable, fuel: int) -> Callable[[int], Optional[int]]:
    """iota restricted to stages up to fuel, as a function."""
    return lambda m: table.iota(m, fuel)
