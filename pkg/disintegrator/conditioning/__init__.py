# Conditioning Module
from .conditioner import (
    ConditionedMeasure, certify_positive, condition, condition_fiber, fiber_set, marginal,
)

__all__ = [
    "ConditionedMeasure", "certify_positive", "condition", "condition_fiber", "fiber_set", "marginal",
]
