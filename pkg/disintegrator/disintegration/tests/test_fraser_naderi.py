"""
Unit Tests for Fraser-Naderi Streams

Author: Disintegrator Team
Date: 2026-10-17
"""

import pytest
from fractions import Fraction

from disintegrator.constructions import cell_ratio, mixture, nu_at_zero, rho_inverse
from disintegrator.disintegration import HEURISTIC, claim_rate, cylinder_scheme, fraser_naderi
from disintegrator.exact_reals import dyadic
from disintegrator.measures import FiniteDiscreteMeasure, ProductMeasure, UniformCantor
from disintegrator.oracle_harness import Enumeration
from disintegrator.shared.exceptions import SpaceMismatch
from disintegrator.spaces import Cantor, NatSet, Naturals, PointName, UltrametricPair, UnitInterval


@pytest.fixture(scope="module")
def mu():
    """The mixture on N x C"""
    return mixture()


@pytest.fixture(scope="module")
def faithful():
    """A rho-faithful sequence for x = {1, 3}"""
    return rho_inverse(Enumeration.from_bits([0, 1, 0, 1]))


@pytest.fixture(scope="module")
def point(faithful):
    """(0^omega, s) in C"""
    zeros = PointName.cantor(Cantor(), lambda i: 0, label="0^w")
    s = PointName.cantor(Cantor(), faithful, label="s")
    return PointName.product(UltrametricPair(), [zeros, s])


@pytest.fixture
def flat():
    """coin x uniform x uniform"""
    coin = FiniteDiscreteMeasure(Naturals(), [(0, Fraction(1, 2)), (1, Fraction(1, 2))])
    pair = ProductMeasure([UniformCantor(), UniformCantor()], space=UltrametricPair())
    return ProductMeasure([coin, pair])


class TestStream:
    """Test conditionals along shrinking cylinders"""

    def test_rejects_non_ultrametric(self, mu):
        """Balls in [0,1] are not handled"""
        with pytest.raises(SpaceMismatch):
            fraser_naderi(mu, cylinder_scheme(), PointName.exact(UnitInterval(), 0))

    def test_product_stream_is_constant(self, flat, point):
        """Every term of a product stream is the first factor"""
        stream = fraser_naderi(flat, cylinder_scheme(), point)
        for n, term in stream.terms(0, 4):
            assert term.box_mass(NatSet.of(0)).refine(10).contains(Fraction(1, 2))

    def test_terms_are_cell_ratios(self, mu, point, faithful):
        """Term n is the ratio over the n-cylinders"""
        stream = fraser_naderi(mu, cylinder_scheme(), point)
        for k in range(3):
            term = stream.value(10, NatSet.of(2 * k), 14)
            ratio = cell_ratio(mu, NatSet.of(2 * k), "0" * 10, faithful.prefix(10)).refine(14)
            assert term.intersect(ratio) is not None

    def test_limit_under_claimed_rate(self, mu, point):
        """The certified limit encloses the kernel at 0"""
        stream = fraser_naderi(mu, cylinder_scheme(), point)
        enclosure = stream.limit_value(NatSet.of(2), 6, claim_rate)
        assert enclosure.contains(nu_at_zero({1: 1, 3: 3}.get, 2))
        result = stream.limit(6, claim_rate)
        assert result.method == "fraser-naderi"
        assert result.index == claim_rate(6)

    def test_limit_is_unverified(self, mu, point):
        """A limit taken at a claimed rate never reports itself verified"""
        result = fraser_naderi(mu, cylinder_scheme(), point).limit(4, claim_rate)
        assert result.verified is False
        assert result.details["rate"] == "claimed"
        assert result.error == dyadic(4)


class TestSettle:
    """Test the stage-budget fallback"""

    def test_settled_stream_returns_term(self, flat, point):
        """Agreeing terms are kept"""
        _, how = fraser_naderi(flat, cylinder_scheme(), point).settle(4, 3)
        assert how == "term"

    def test_moving_stream_falls_back(self, mu, point):
        """A row still moving at the budget is replaced by the marginal and labelled"""
        stream = fraser_naderi(mu, cylinder_scheme(), point)
        fallback, how = stream.settle(16, 7, probes=[NatSet.of(6)])
        assert how == HEURISTIC
        assert fallback.space == Naturals()
