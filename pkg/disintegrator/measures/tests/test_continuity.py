"""
Unit Tests for Continuity Sets, Radii and Bases

Author: Disintegrator Team
Date: 2026-10-17
"""

import pytest
from dataclasses import replace
from fractions import Fraction
from hypothesis import given, settings
from hypothesis import strategies as st

from disintegrator.exact_reals import const, dyadic
from disintegrator.measures import (
    ContinuitySetName, ConvexCombination, FiniteDiscreteMeasure, Lebesgue, ProductMeasure,
    continuity_basis, continuity_radii, cset_algebra, cset_measure, dyadic_radii, measure_from_basis,
    values_of,
)
from disintegrator.shared.exceptions import InconsistentValues, SpaceMismatch
from disintegrator.spaces import Interval, NatSet, OpenSetName, PointName, member, mk_space

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@pytest.fixture
def unit():
    """The unit interval"""
    return mk_space("unit-interval")


@pytest.fixture
def lower_half(unit):
    """(0, 1/2) with witness (1/2, 1]"""
    return ContinuitySetName.from_region(unit, Interval(0, HALF), label="lower")


@pytest.fixture
def atom_and_lebesgue(unit):
    """1/2 delta_{1/2} + 1/2 Lebesgue"""
    return ConvexCombination([(HALF, FiniteDiscreteMeasure.dirac(unit, HALF)), (HALF, Lebesgue())])


class TestCsetMeasure:
    """Test two-sided enclosures"""

    def test_lebesgue_half(self, lower_half):
        """Lebesgue (0, 1/2) is 1/2 to any precision"""
        value = cset_measure(Lebesgue(), lower_half).refine(30)
        assert value.contains(HALF)
        assert value.width <= dyadic(30)

    def test_discrete_singleton(self):
        """mu{0} = 1/3 exactly"""
        naturals = mk_space("naturals-discrete")
        mu = FiniteDiscreteMeasure(naturals, [(0, Fraction(1, 3)), (1, Fraction(2, 3))])
        h = ContinuitySetName.from_region(naturals, NatSet.of(0))
        assert cset_measure(mu, h).refine(20).contains(Fraction(1, 3))

    def test_space_mismatch(self, lower_half):
        """Continuity sets must share the measure's space"""
        with pytest.raises(SpaceMismatch):
            cset_measure(FiniteDiscreteMeasure.dirac(mk_space("cantor"), ""), lower_half)

    @settings(max_examples=100, deadline=None)
    @given(a=st.integers(0, 15), width=st.integers(1, 16))
    def test_bounds_never_cross(self, a, width):
        """eval(u) + eval(v) <= 1 at every stage"""
        unit = mk_space("unit-interval")
        mu = ConvexCombination([(HALF, FiniteDiscreteMeasure.dirac(unit, HALF)), (HALF, Lebesgue())])
        h = ContinuitySetName.from_region(unit, Interval(Fraction(a, 16), min(Fraction(a + width, 16), Fraction(1))))
        lower, witness = mu.eval(h.u), mu.eval(h.v)
        assert all(lower.bound(n) + witness.bound(n) <= 1 for n in range(6))

    @settings(max_examples=50, deadline=None)
    @given(a=st.integers(0, 15), width=st.integers(1, 16))
    def test_region_agrees_with_squeeze(self, a, width):
        """Box masses of a region-backed set agree with the eval squeeze"""
        unit = mk_space("unit-interval")
        mu = ConvexCombination([(HALF, FiniteDiscreteMeasure.dirac(unit, Fraction(5, 32))), (HALF, Lebesgue())])
        h = ContinuitySetName.from_region(unit, Interval(Fraction(a, 16), min(Fraction(a + width, 16), Fraction(1))))
        fast = cset_measure(mu, h).refine(10)
        slow = cset_measure(mu, replace(h, region=None)).refine(10)
        assert fast.intersect(slow) is not None


class TestCsetAlgebra:
    """Test the continuity-set operations"""

    def test_intersect_whole(self, unit, lower_half):
        """H & whole = H"""
        h = cset_algebra("intersect", lower_half, ContinuitySetName.whole(unit))
        assert cset_measure(Lebesgue(), h).refine(12).contains(HALF)

    def test_union(self, unit, lower_half):
        """(0, 1/2) | (1/4, 3/4) has measure 3/4"""
        middle = ContinuitySetName.from_region(unit, Interval(QUARTER, Fraction(3, 4)))
        h = cset_algebra("union", lower_half, middle)
        assert cset_measure(Lebesgue(), h).refine(12).contains(Fraction(3, 4))

    def test_complement_twice(self, lower_half):
        """The witness of the witness is the original set"""
        twice = cset_algebra("complement_witness", cset_algebra("complement_witness", lower_half))
        assert twice.u is lower_half.u
        assert cset_measure(Lebesgue(), twice).refine(12).contains(HALF)

    def test_product(self, lower_half):
        """(0,1/2)^2 under Lebesgue squared is 1/4"""
        h = cset_algebra("product", lower_half, lower_half)
        mu = ProductMeasure([Lebesgue(), Lebesgue()])
        assert cset_measure(mu, h).refine(12).contains(QUARTER)

    def test_regions_carried(self, unit, lower_half):
        """Intersections and products of region-backed sets stay region-backed"""
        middle = ContinuitySetName.from_region(unit, Interval(QUARTER, Fraction(3, 4)))
        both = cset_algebra("intersect", lower_half, middle)
        assert both.region is not None
        assert cset_measure(Lebesgue(), both).refine(20).contains(QUARTER)
        square = cset_algebra("product", lower_half, middle)
        assert square.region == (lower_half.region, middle.region)

    def test_unknown_operation(self, lower_half):
        """Unsupported operations are rejected"""
        with pytest.raises(ValueError):
            cset_algebra("xor", lower_half, lower_half)


class TestRadii:
    """Test certified continuity radii"""

    def test_dyadic_order(self):
        """Coarse to fine, then by numerator"""
        radii = dyadic_radii()
        assert [next(radii) for _ in range(6)] == [1, HALF, QUARTER, Fraction(3, 4), Fraction(1, 8), Fraction(3, 8)]

    def test_lebesgue_certificates(self):
        """Atomless measures certify every radius"""
        stream = continuity_radii(Lebesgue())
        for i in range(6):
            certified = stream(i)
            assert certified.annulus < dyadic(certified.stage)
        assert len({stream.radius(i) for i in range(6)}) == 6

    def test_atom_sphere_excluded(self, atom_and_lebesgue):
        """Around 0 the radius 1/2 hits the atom and is never emitted"""
        stream = continuity_radii(atom_and_lebesgue, centres=[0])
        radii = [stream.radius(i) for i in range(8)]
        assert HALF not in radii
        assert radii[:3] == [1, QUARTER, Fraction(3, 4)]

    def test_dirac_at_centre(self, unit):
        """Every radius around the atom itself qualifies"""
        stream = continuity_radii(FiniteDiscreteMeasure.dirac(unit, 0), centres=[0])
        assert [stream.radius(i) for i in range(4)] == [1, HALF, QUARTER, Fraction(3, 4)]


class TestBasis:
    """Test continuity bases and decompositions"""

    def test_naturals_singletons(self):
        """Basis balls on N are singletons with cofinite witnesses"""
        naturals = mk_space("naturals-discrete")
        basis = continuity_basis(FiniteDiscreteMeasure(naturals, [(0, HALF), (2, HALF)]))
        h = basis.sets(2 * 7)  # code 7 = <2, 1>: radius 1 fails around atom 2, radius 1/4 is second
        assert h.u.regions(1) == [NatSet.of(2)]
        assert h.v.regions(1) == [NatSet(frozenset({2}), True)]

    def test_lebesgue_basis_witness(self, unit):
        """Witnesses cover the rest of [0,1] up to the endpoints"""
        basis = continuity_basis(Lebesgue())
        h = basis.sets(2 * 12)  # ball around 1/2 of radius 1/4
        assert h.u.regions(1) == [Interval(QUARTER, Fraction(3, 4))]
        assert cset_measure(Lebesgue(), h).refine(16).contains(HALF)

    def test_decompose_ball(self, unit):
        """Decomposing B(1/2, 1/4) recovers measure 1/2"""
        basis = continuity_basis(Lebesgue())
        U = OpenSetName.ball(unit, HALF, QUARTER)
        indices = basis.decompose(U).indices(91)
        assert 24 in indices
        union = basis.union_of(indices)
        assert Lebesgue().mass_of_regions(union.regions(len(indices))).refine(10).contains(HALF)

    def test_decompose_covers_members(self, unit):
        """Members of U are members of the decomposition"""
        basis = continuity_basis(Lebesgue())
        U = OpenSetName.ball(unit, HALF, QUARTER)
        union = basis.union_of(basis.decompose(U).indices(91))
        assert member(PointName.exact(unit, HALF), U, 10).is_yes
        assert member(PointName.exact(unit, HALF), union, 10).is_yes

    def test_intersection_index(self, unit):
        """Odd indices intersect the balls named by the bits of c+1"""
        basis = continuity_basis(Lebesgue())
        assert basis.codes_of(2 * 5 + 1) == [1, 2]


class TestMeasureFromBasis:
    """Test reconstruction from basis values"""

    def test_round_trip_lebesgue(self, unit):
        """Basis values from Lebesgue reproduce the length of a ball"""
        basis = continuity_basis(Lebesgue())
        mu = measure_from_basis(basis, values_of(Lebesgue(), basis))
        assert mu.eval(OpenSetName.ball(unit, HALF, QUARTER)).bound(91) == HALF

    def test_empty(self, unit):
        """Zero values give eval(empty) = 0"""
        basis = continuity_basis(Lebesgue())
        mu = measure_from_basis(basis, lambda indices: const(0))
        assert mu.eval(OpenSetName.empty(unit)).bound(10) == 0

    def test_monotonicity_violation(self, unit):
        """Values shrinking on a superset are detected lazily"""
        basis = continuity_basis(Lebesgue())
        mu = measure_from_basis(basis, lambda indices: const(1 - Fraction(len(indices) - 1, 2)))
        lower = mu.eval(OpenSetName.ball(unit, HALF, QUARTER))
        assert lower.bound(91) == 1
        with pytest.raises(InconsistentValues):
            lower.bound(351)
