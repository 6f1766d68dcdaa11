"""
Unit Tests for Tjur-Limit and Modulus Disintegration

Author: Disintegrator Team
Date: 2026-10-17
"""

import pytest
from fractions import Fraction

from disintegrator.constructions import (
    DyadicBasis, WitnessTable, density, iota_modulus, iota_of, mu_x, nu_at_zero, witness_table,
)
from disintegrator.disintegration import (
    DisintegrationResult, modulus_disintegrate, separated, tjur_disintegrate, tjur_distance_triples,
    trivial_modulus,
)
from disintegrator.exact_reals import dyadic
from disintegrator.measures import FiniteDiscreteMeasure, Lebesgue, ProductMeasure
from disintegrator.oracle_harness import Enumeration, FuelPolicy
from disintegrator.spaces import NatSet, Naturals, PointName, UnitInterval

HALF = Fraction(1, 2)


@pytest.fixture
def coin():
    """Fair coin on {0, 1}"""
    return FiniteDiscreteMeasure(Naturals(), [(0, HALF), (1, HALF)], label="coin")


@pytest.fixture
def product(coin):
    """coin x Lebesgue: every conditional is the coin"""
    return ProductMeasure([coin, Lebesgue()])


@pytest.fixture
def origin():
    """The point 0 of [0,1]"""
    return PointName.exact(UnitInterval(), 0)


class TestSeparated:
    """Test separation certificates"""

    def test_distinct_atoms(self):
        """delta_0 and delta_1 are more than 1/2 apart"""
        a = FiniteDiscreteMeasure.dirac(Naturals(), 0)
        b = FiniteDiscreteMeasure.dirac(Naturals(), 1)
        assert separated(a, b, 1, 10)

    def test_equal_measures(self, coin):
        """A measure is never separated from itself"""
        assert not separated(coin, coin, 3, 10)

    def test_unit_interval_probes(self):
        """Far-apart Diracs on [0,1] are certified separated"""
        a = FiniteDiscreteMeasure.dirac(UnitInterval(), Fraction(1, 16))
        b = FiniteDiscreteMeasure.dirac(UnitInterval(), Fraction(15, 16))
        assert separated(a, b, 1, 10)


class TestTjur:
    """Test the Tjur-limit search"""

    def test_product_has_no_triples(self, product):
        """Conditionals of a product never separate"""
        assert tjur_distance_triples(product, DyadicBasis(), 2) == []

    def test_product_disintegrates_to_marginal(self, product, origin):
        """The disintegration of a product is its first factor"""
        result = tjur_disintegrate(product, origin, 2, FuelPolicy.exact(bound=4), DyadicBasis(), fuel=8)
        assert result.verified
        assert result.method == "tjur"
        assert result.error == 2 * dyadic(2)
        assert result.measure.box_mass(NatSet.of(0)).refine(12).contains(HALF)

    def test_fuel_policy_is_unverified(self, product, origin):
        """Answers from a fuel-bounded oracle are flagged"""
        result = tjur_disintegrate(product, origin, 1, FuelPolicy.fuel_bounded(2), DyadicBasis(), fuel=4)
        assert not result.verified
        assert result.details["oracle"]


class TestModulus:
    """Test disintegration from a Tjur modulus"""

    def test_trivial_modulus_on_product(self, product, origin):
        """The trivial modulus is valid for products"""
        result = modulus_disintegrate(product, trivial_modulus(DyadicBasis()), origin, 6)
        assert result.method == "modulus"
        assert result.error == dyadic(6)
        assert result.atom(1, 10).contains(HALF)

    def test_mu_x_at_zero(self, origin):
        """The located conditional of mu_x is within 2^{-p} of the kernel at 0"""
        stages = {0: 1, 1: 0}
        result = modulus_disintegrate(mu_x(WitnessTable.from_iota(stages)), iota_modulus(stages.get), origin, 6)
        for n in range(6):
            assert result.atom(n, 10).contains(nu_at_zero(stages.get, n))


class TestResult:
    """Test disintegration results"""

    def test_enclose_clamps(self, coin):
        """Enclosures stay inside [0,1]"""
        result = DisintegrationResult(coin, index=0, error=Fraction(3, 4))
        enclosure = result.atom(0, 8)
        assert enclosure.lo == 0 and enclosure.hi == 1

    def test_to_dict(self, coin):
        """Errors are serialized as p/q strings"""
        result = DisintegrationResult(coin, index=3, error=dyadic(4), verified=False, details={"oracle": "fuel"})
        assert result.to_dict() == {
            "method": "tjur", "index": 3, "error": "1/16", "verified": False, "oracle": "fuel",
        }

    def test_approximant_adds_error(self, coin):
        """The approximant's error includes the tag"""
        result = DisintegrationResult(coin, index=0, error=dyadic(5))
        _, err = result.approximant(6)
        assert err >= dyadic(5)


@pytest.fixture(scope="module")
def mu_101():
    """mu_x for x = 101, witnessed at stages 0 and 2"""
    return mu_x(witness_table(Enumeration.from_bits([1, 0, 1])))


@pytest.fixture(scope="module")
def mu_1010():
    """mu_x for x = 1010 with the default witness stages"""
    return mu_x(witness_table(Enumeration.from_bits([1, 0, 1, 0])))


class TestTjurOnMuX:
    """Test the Tjur search against the continuous kernel of mu_x"""

    @pytest.mark.parametrize("q", [0, Fraction(1, 16), Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), HALF,
                                   Fraction(5, 8), Fraction(3, 4), Fraction(7, 8), 1])
    def test_matches_density(self, mu_101, q):
        """The settled conditional sits within its error of g_n(t)"""
        t = PointName.exact(UnitInterval(), q)
        result = tjur_disintegrate(mu_101, t, 8, basis=DyadicBasis())
        assert result.verified
        assert result.error == 2 * dyadic(8)
        iotas = {0: 0, 2: 2}.get
        for n in range(8):
            exact = density(iotas(n // 2), n, q).refine(20)
            assert result.atom(n, 14).intersect(exact) is not None

    @pytest.mark.parametrize("q", [0, Fraction(1, 8), Fraction(3, 8), Fraction(5, 8), 1])
    def test_agrees_with_modulus(self, mu_1010, q):
        """Tjur and modulus conditionals agree to 2^-8 at precision 10"""
        t = PointName.exact(UnitInterval(), q)
        table = witness_table(Enumeration.from_bits([1, 0, 1, 0]))
        searched = tjur_disintegrate(mu_1010, t, 10, basis=DyadicBasis())
        located = modulus_disintegrate(mu_1010, iota_modulus(iota_of(table, 64)), t, 10)
        for n in range(8):
            a = searched.measure.box_mass(NatSet.of(n)).refine(16)
            b = located.measure.box_mass(NatSet.of(n)).refine(16)
            assert max(a.hi - b.lo, b.hi - a.lo) <= dyadic(8)

    def test_default_fuel_settles_at_origin(self, mu_101, origin):
        """The default search settles mu_x at 0 to 2^-13"""
        result = tjur_disintegrate(mu_101, origin, 13, basis=DyadicBasis())
        for k in range(3):
            assert result.atom(2 * k, 19).contains(nu_at_zero({0: 0, 2: 2}.get, 2 * k))
