# Spaces Module
from .metric import (
    SpaceKind, MetricSpace, UnitInterval, Naturals, Cantor, ProductSpace, UltrametricPair,
    mk_space, space_from_tree, naturals_times_pair,
)
from .names import (
    PointName, OpenSetName, Ball, PADDING, limit_fast_cauchy, member, union_opens, product_open,
    intersect_opens,
)
from .regions import (
    Interval, NatSet, Cylinder, Region, UNIT, ALL_NATURALS, ALL_SEQUENCES,
    contains, difference, disjointify, exterior, intersect, is_empty, subset,
)
