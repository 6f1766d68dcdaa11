"""
Unit Tests for Recovering x From Disintegrations

Author: Disintegrator Team
Date: 2026-10-17
"""

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from disintegrator.constructions import (
    WitnessTable, iota_modulus, mu_x, recover_bit, recover_x, reduce_demo, scaled_atom,
)
from disintegrator.disintegration import modulus_disintegrate
from disintegrator.exact_reals import RationalInterval, dyadic
from disintegrator.measures import FiniteDiscreteMeasure
from disintegrator.oracle_harness import Enumeration, FuelPolicy, Trace
from disintegrator.shared.exceptions import AmbiguousAtom
from disintegrator.spaces import Naturals, PointName, UnitInterval


class TestRecoverBit:
    """Test single-bit recovery"""

    def test_scaled_atom(self):
        """2^{k+2} nu{2k} is 2 for members"""
        assert scaled_atom(RationalInterval.point(dyadic(3)), 2) == RationalInterval.point(2)

    def test_decides_both_sides(self):
        """Enclosures below and above 3 * 2^{-k-3} decide the bit"""
        assert recover_bit(RationalInterval(Fraction(15, 64), Fraction(17, 64)), 0) == 1
        assert recover_bit(RationalInterval(Fraction(7, 64), Fraction(9, 64)), 0) == 0
        assert recover_bit(RationalInterval.point(dyadic(3)), 1) == 0

    def test_straddle_raises(self):
        """An enclosure across the midpoint is ambiguous"""
        with pytest.raises(AmbiguousAtom):
            recover_bit(RationalInterval(Fraction(1, 8), Fraction(1, 4)), 0)


class TestRecoverX:
    """Test recovery from whole conditionals"""

    def test_closed_form_conditional(self):
        """The conditional at 0 of x = {0} gives back 1, 0, 0"""
        atoms = [
            (0, Fraction(1, 2)), (2, Fraction(1, 8)), (3, Fraction(1, 8)),
            (4, Fraction(1, 16)), (5, Fraction(1, 16)), (6, Fraction(1, 8)),
        ]
        nu = FiniteDiscreteMeasure(Naturals(), atoms, label="nu_x(0)")
        assert recover_x(nu, 3) == [1, 0, 0]

    def test_error_can_hide_bits(self):
        """A large error leaves the first bit undecided"""
        nu = FiniteDiscreteMeasure(Naturals(), [(0, Fraction(1, 2)), (1, Fraction(1, 2))])
        with pytest.raises(AmbiguousAtom):
            recover_x(nu, 1, error=Fraction(1, 4))

    def test_through_modulus(self):
        """A modulus disintegration of mu_x at 0 recovers x = {0, 2}"""
        table = WitnessTable.from_iota({0: 0, 2: 2})
        mod = iota_modulus({0: 0, 2: 2}.get)
        result = modulus_disintegrate(mu_x(table), mod, PointName.exact(UnitInterval(), 0), 8)
        assert recover_x(result.measure, 3, result.error) == [1, 0, 1]


class TestReduceDemo:
    """Test the composed reduction"""

    def test_exact_policy(self):
        """Early witnesses come back verified"""
        trace = Trace()
        report = reduce_demo(Enumeration.from_bits([1, 0]), 2, FuelPolicy.exact(bound=32), fuel=64, trace=trace)
        assert report.bits == [1, 0]
        assert report.verified
        assert report.inputs >= 1
        assert len(report.stages) == len(trace)

    def test_fuel_policy_misses_late_witnesses(self):
        """Witnesses past the fuel are read as 0 and flagged unverified"""
        x = Enumeration.from_bits([1, 1], stages=[5, 6])
        report = reduce_demo(x, 2, FuelPolicy.fuel_bounded(1), fuel=64)
        assert report.bits == [0, 0]
        assert not report.verified

    @pytest.mark.parametrize("pattern", [
        "00000000", "11111111", "10000000", "00010000", "00000001", "10100000", "0100000000000010",
    ])
    def test_battery_at_default_fuel(self, pattern):
        """Patterns up to sixteen bits come back under the default fuel"""
        bits = [int(c) for c in pattern]
        report = reduce_demo(Enumeration.from_bits(bits), len(bits))
        assert report.bits == bits
        assert report.verified

    @given(st.lists(st.integers(0, 1), min_size=6, max_size=6))
    @settings(max_examples=50, deadline=None)
    def test_random_patterns(self, bits):
        """Any six-bit prefix survives the reduction"""
        assert reduce_demo(Enumeration.from_bits(bits), 6).bits == bits

    @pytest.mark.parametrize("stages", [[3, 6, 12], [1, 9, 5], [16, 2, 7]])
    def test_fuel_flips_each_bit_once(self, stages):
        """Bit k turns from 0 to 1 exactly when the fuel reaches its witness stage"""
        x = Enumeration.from_bits([1, 1, 1], stages=stages)
        fuels = [0, 2, 4, 8, 16]
        columns = []
        for fuel in fuels:
            report = reduce_demo(x, 3, FuelPolicy.fuel_bounded(fuel))
            assert not report.verified
            assert report.bits == [int(fuel >= s) for s in stages]
            columns.append(report.bits)
        for k in range(3):
            row = [bits[k] for bits in columns]
            assert row == sorted(row)
            assert sum(a != b for a, b in zip(row, row[1:])) == 1
