"""
Unit Tests for Conditioning

Author: Disintegrator Team
Date: 2026-10-17
"""

import pytest
from fractions import Fraction
from itertools import combinations
from hypothesis import assume, given, settings, strategies as st

from disintegrator.conditioning import condition, condition_fiber, fiber_set, marginal
from disintegrator.exact_reals import dyadic
from disintegrator.measures import ContinuitySetName, FiniteDiscreteMeasure, Lebesgue, ProductMeasure
from disintegrator.shared.exceptions import NullConditioningSet, SpaceMismatch
from disintegrator.spaces import ALL_NATURALS, UNIT, Interval, NatSet, OpenSetName, mk_space

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@pytest.fixture
def unit():
    """The unit interval"""
    return mk_space("unit-interval")


@pytest.fixture
def naturals():
    """N with the discrete metric"""
    return mk_space("naturals-discrete")


def region_set(space, lo, hi, label=""):
    return ContinuitySetName.from_region(space, Interval(Fraction(lo), Fraction(hi)), label=label)


class TestCondition:
    """Test conditioning on a continuity set"""

    def test_dirac_stays_dirac(self, unit):
        """delta_a | H = delta_a when a lies in H"""
        mu = FiniteDiscreteMeasure.dirac(unit, QUARTER)
        conditioned = condition(mu, region_set(unit, 0, HALF))
        assert conditioned.box_mass(Interval(0, HALF)).refine(20).contains(1)
        assert conditioned.box_mass(Interval(HALF, 1)).refine(20).contains(0)

    def test_lebesgue_ball(self, unit):
        """Lebesgue | (0,1/2) gives B(1/4, 1/8) mass 1/2"""
        conditioned = condition(Lebesgue(), region_set(unit, 0, HALF))
        bound = conditioned.eval(OpenSetName.ball(unit, QUARTER, Fraction(1, 8))).bound(20)
        assert HALF - dyadic(10) <= bound <= HALF
        assert conditioned.box_mass(Interval(Fraction(1, 8), Fraction(3, 8))).refine(20).contains(HALF)

    def test_whole_space_is_identity(self, unit):
        """Conditioning on the whole space changes nothing"""
        conditioned = condition(Lebesgue(), ContinuitySetName.whole(unit))
        assert conditioned.box_mass(Interval(QUARTER, HALF)).refine(20).contains(QUARTER)

    def test_chaining(self, unit):
        """(mu | H1) | H2 agrees with mu | (H1 & H2)"""
        first = condition(Lebesgue(), region_set(unit, 0, Fraction(3, 4)))
        chained = condition(first, region_set(unit, QUARTER, 1))
        direct = condition(Lebesgue(), region_set(unit, QUARTER, Fraction(3, 4)))
        box = Interval(QUARTER, HALF)
        assert chained.box_mass(box).refine(12).contains(HALF)
        assert direct.box_mass(box).refine(12).contains(HALF)

    def test_eval_bounded_by_one(self, unit):
        """Lower bounds of the conditioned valuation never exceed 1"""
        conditioned = condition(Lebesgue(), region_set(unit, 0, HALF))
        whole = conditioned.eval(OpenSetName.whole(unit))
        assert all(whole.bound(n) <= 1 for n in range(8))

    def test_null_set(self, unit):
        """A set of measure 0 cannot be conditioned on"""
        mu = FiniteDiscreteMeasure.dirac(unit, 0)
        with pytest.raises(NullConditioningSet):
            condition(mu, region_set(unit, HALF, 1), fuel=10)

    def test_space_mismatch(self, naturals, unit):
        """The set must live in the measure's space"""
        with pytest.raises(SpaceMismatch):
            condition(Lebesgue(), ContinuitySetName.from_region(naturals, NatSet.of(0)))

    def test_certified_stage_recorded(self, unit):
        """The positivity certificate stage is kept"""
        conditioned = condition(Lebesgue(), region_set(unit, 0, HALF))
        assert conditioned.certified_at >= 0


class TestConditionFiber:
    """Test conditioning on S x U"""

    def test_discrete_ratio(self, naturals):
        """mu({1} x {1}) / mu(N x {1}) exactly"""
        square = mk_space("product", [naturals, naturals])
        mu = FiniteDiscreteMeasure(square, [((0, 0), QUARTER), ((0, 1), QUARTER), ((1, 1), HALF)])
        conditioned = condition_fiber(mu, ContinuitySetName.from_region(naturals, NatSet.of(1)))
        assert conditioned.box_mass((NatSet.of(1), ALL_NATURALS)).refine(20).contains(Fraction(2, 3))
        assert conditioned.box_mass((NatSet.of(0), ALL_NATURALS)).refine(20).contains(Fraction(1, 3))

    def test_independent_product(self, unit):
        """Conditioning one factor of a product leaves the other marginal alone"""
        mu = ProductMeasure([Lebesgue(), Lebesgue()])
        conditioned = condition_fiber(mu, region_set(unit, 0, HALF))
        assert conditioned.box_mass((Interval(QUARTER, HALF), UNIT)).refine(16).contains(QUARTER)
        assert marginal(conditioned, 0).box_mass(Interval(QUARTER, HALF)).refine(16).contains(QUARTER)

    def test_fiber_needs_product(self, unit):
        """S x U only makes sense in a product"""
        with pytest.raises(SpaceMismatch):
            fiber_set(Lebesgue(), region_set(unit, 0, HALF))

    def test_second_factor_checked(self, naturals, unit):
        """U must live in the second factor"""
        mu = ProductMeasure([Lebesgue(), Lebesgue()])
        with pytest.raises(SpaceMismatch):
            fiber_set(mu, ContinuitySetName.from_region(naturals, NatSet.of(0)))


class TestMarginal:
    """Test marginals of product measures"""

    def test_discrete_marginal(self, naturals):
        """First marginal sums over the second coordinate"""
        square = mk_space("product", [naturals, naturals])
        mu = FiniteDiscreteMeasure(square, [((0, 0), QUARTER), ((0, 1), QUARTER), ((1, 1), HALF)])
        assert marginal(mu, 0).box_mass(NatSet.of(0)).refine(20).contains(HALF)
        assert marginal(mu, 1).box_mass(NatSet.of(1)).refine(20).contains(Fraction(3, 4))

    def test_not_a_product(self):
        """Marginals need a product space"""
        with pytest.raises(SpaceMismatch):
            marginal(Lebesgue())


def subsets(elements):
    elements = sorted(elements)
    return [frozenset(c) for r in range(len(elements) + 1) for c in combinations(elements, r)]


finite_plans = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 8), min_size=1, max_size=6,
)


def plan_measure(plan):
    total = sum(plan.values())
    square = mk_space("product", [mk_space("naturals-discrete"), mk_space("naturals-discrete")])
    return FiniteDiscreteMeasure(square, [(tag, Fraction(w, total)) for tag, w in plan.items()])


class TestFiniteIdentities:
    """Test conditioning identities on random finite measures on N x N"""

    @given(finite_plans)
    @settings(max_examples=40, deadline=None)
    def test_fibers_reassemble(self, plan):
        """Fibre conditionals weighted by the T-marginal give back mu(A x N)"""
        mu = plan_measure(plan)
        naturals = mk_space("naturals-discrete")
        firsts = {a for a, _ in plan}
        seconds = {b for _, b in plan}
        weights = {u: marginal(mu, 1).box_mass(NatSet.of(u)).refine(30) for u in seconds}
        fibers = {u: marginal(condition_fiber(mu, ContinuitySetName.from_region(naturals, NatSet.of(u))), 0)
                  for u in seconds}
        for a in subsets(firsts):
            lo = hi = Fraction(0)
            for u in seconds:
                mass = fibers[u].box_mass(NatSet(a)).refine(30)
                lo += mass.lo * weights[u].lo
                hi += mass.hi * weights[u].hi
            expected = mu.exact_mass((NatSet(a), ALL_NATURALS))
            assert lo <= expected <= hi
            assert hi - lo <= dyadic(20)

    @given(finite_plans, st.frozensets(st.integers(0, 3), min_size=1), st.frozensets(st.integers(0, 3), min_size=1))
    @settings(max_examples=40, deadline=None)
    def test_conditioning_is_a_ratio(self, plan, u_first, u_second):
        """mu_U(A) = mu(A & U) / mu(U) for every A over the support"""
        mu = plan_measure(plan)
        box = (NatSet(u_first), NatSet(u_second))
        denominator = mu.exact_mass(box)
        assume(denominator > 0)
        conditioned = condition(mu, ContinuitySetName.from_region(mu.space, box))
        for a in subsets({a for a, _ in plan}):
            numerator = mu.exact_mass((NatSet(a & u_first), NatSet(u_second)))
            enclosure = conditioned.box_mass((NatSet(a), ALL_NATURALS)).refine(30)
            assert enclosure.contains(numerator / denominator)
