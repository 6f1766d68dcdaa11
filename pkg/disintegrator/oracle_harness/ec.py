"""
EC Oracle - Disintegrator

EC turns an enumeration into a characteristic function. It is not
computable, so every call names a fuel policy:

- exact: a witness bound bound(m) at or above the stage where m would be
  enumerated; answers are verified.
- fuel-bounded: only stages up to a fixed fuel are read; 1-answers are
  correct, 0-answers may be wrong and the result is tagged unverified.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Union

from disintegrator.shared.config import get_config
from disintegrator.shared.exceptions import OracleExhausted
from .enumeration import Enumeration

logger = logging.getLogger(__name__)


class PolicyMode(str, Enum):
    """How far an oracle may read its enumeration"""
    EXACT = "exact"
    FUEL = "fuel"


def _constant_bound(stage: int) -> Callable[[int], int]:
    return lambda m: stage


@dataclass(frozen=True)
class FuelPolicy:
    """
    Oracle reading policy.

    Args:
        mode: exact (witness bound) or fuel (fixed stage cap)
        bound: Witness bound m -> stage (exact mode)
        fuel: Last stage read (fuel mode)
        strict: In fuel mode, raise OracleExhausted instead of answering an unseen m with 0
    """
    mode: PolicyMode
    bound: Optional[Callable[[int], int]] = None
    fuel: Optional[int] = None
    strict: bool = False

    @classmethod
    def exact(cls, bound: Union[int, Callable[[int], int], None] = None) -> "FuelPolicy":
        """Exact policy; an int bound applies to every m (default: witness_bound)."""
        if bound is None:
            bound = get_config().witness_bound
        if isinstance(bound, int):
            bound = _constant_bound(bound)
        return cls(PolicyMode.EXACT, bound=bound)

    @classmethod
    def fuel_bounded(cls, fuel: int, strict: bool = False) -> "FuelPolicy":
        if fuel < 0:
            raise ValueError(f"fuel must be >= 0, got {fuel}")
        return cls(PolicyMode.FUEL, fuel=fuel, strict=strict)

    @property
    def verified(self) -> bool:
        return self.mode == PolicyMode.EXACT

    def stage_for(self, m: int) -> int:
        return self.bound(m) if self.mode == PolicyMode.EXACT else self.fuel

    def describe(self) -> Dict[str, object]:
        if self.mode == PolicyMode.EXACT:
            return {"mode": "exact"}
        return {"mode": "fuel", "fuel": self.fuel}


class ECResult:
    """
    Characteristic function answered by an oracle.

    Answers are memoized; ``verified`` is False whenever 0-answers came from
    a fuel-bounded read.
    """

    def __init__(self, x: Enumeration, policy: FuelPolicy):
        self.x = x
        self.policy = policy
        self.verified = policy.verified
        self._answers: Dict[int, int] = {}

    def __call__(self, m: int) -> int:
        if m not in self._answers:
            stage = self.policy.stage_for(m)
            answer = 1 if self.x.member_at(m, stage) else 0
            if answer == 0 and self.policy.strict and not self.policy.verified:
                raise OracleExhausted(f"{self.x.label}: {m} not enumerated within fuel {stage}")
            self._answers[m] = answer
        return self._answers[m]

    def bits(self, n: int) -> List[int]:
        return [self(m) for m in range(n)]


def ec(x: Enumeration, policy: Optional[FuelPolicy] = None) -> ECResult:
    """
    Characteristic function of the set x enumerates.

    Args:
        x: Enumeration
        policy: Reading policy (default: exact with the configured witness bound)

    Returns:
        ECResult: m -> {0, 1}, with the verified flag
    """
    policy = policy or FuelPolicy.exact()
    logger.debug(f"EC on {x.label} under {policy.describe()}")
    return ECResult(x, policy)
