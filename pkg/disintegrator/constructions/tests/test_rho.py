"""
Unit Tests for rho and Its Faithful Inverse

Author: Disintegrator Team
Date: 2026-10-17
"""

from hypothesis import given, settings, strategies as st

from disintegrator.constructions import block_at, occurring_runs, pattern_bit, rho, rho_inverse
from disintegrator.oracle_harness import Enumeration


def rho_prime(word):
    """Every k with 01^k0 somewhere in word"""
    return occurring_runs(word)


def word_bits(word):
    return lambda i: int(word[i]) if i < len(word) else 1


class TestPatterns:
    """Test block detection"""

    def test_pattern_bits(self):
        """0(1^2 0)^2 = 0110110"""
        assert "".join(str(pattern_bit(2, o)) for o in range(7)) == "0110110"

    def test_block_at(self):
        """The block for k must start exactly at position p"""
        s = word_bits("110110110")
        assert block_at(s, 2, 2)
        assert not block_at(s, 2, 3)
        assert not block_at(s, 1, 2)

    def test_occurring_runs(self):
        """Runs of 1s closed by zeros on both sides"""
        assert occurring_runs("1010111011101110") == {1, 3}
        assert occurring_runs("1111") == set()
        assert occurring_runs("001") == {0}


class TestRho:
    """Test rho"""

    def test_all_ones(self):
        """s = 1^omega enumerates nothing"""
        assert rho(lambda i: 1).emit(12) == frozenset()

    def test_leading_zero_enumerates_everything(self):
        """A 0 at position 0 is the block 0(1^k 0)^0 for every k"""
        assert rho(lambda i: 0 if i == 0 else 1).emit(5) == frozenset(range(6))

    def test_stage_is_max_of_k_and_position(self):
        """k enters at stage max(k, p)"""
        x = rho(word_bits("1010111011101110"))
        assert x.first_stage(1, 20) == 1
        assert x.first_stage(3, 20) == 3
        assert x.emit(20) == frozenset({1, 3})


class TestRhoInverse:
    """Test the faithful inverse"""

    def test_empty_is_all_ones(self):
        """x = {} gives 1^omega"""
        s = rho_inverse(Enumeration.empty())
        assert s.prefix(40) == "1" * 40

    def test_singleton_two(self):
        """x = {2}: the block 0(110)^2 sits at position 2"""
        s = rho_inverse(Enumeration.from_bits([0, 0, 1]))
        assert s.prefix(9) == "110110110"
        assert block_at(s, 2, 2)
        word = s.prefix(60)
        assert "0110" in word and "00" not in word
        assert occurring_runs(word) == {2}

    def test_one_and_three(self):
        """x = {1, 3} writes 1 0 10 (1110)^3 and pads with 1110"""
        s = rho_inverse(Enumeration.from_bits([0, 1, 0, 1]))
        assert s.prefix(16) == "1010111011101110"
        assert s.prefix(24)[16:] == "11101110"

    def test_late_witness_keeps_cursor(self):
        """A late witness is written where the cursor stands"""
        s = rho_inverse(Enumeration.from_bits([1], stages=[4]))
        assert s.prefix(4) == "1111"
        assert block_at(s, 0, 4)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=6))
    @settings(max_examples=100)
    def test_faithful(self, bits):
        """Every prefix contains 01^k0 exactly for the enumerated k"""
        s = rho_inverse(Enumeration.from_bits(bits))
        s.advance(len(bits))
        word = s.prefix(s.length)
        assert occurring_runs(word) == {k for k, b in enumerate(bits) if b}

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=4))
    @settings(max_examples=100)
    def test_round_trip(self, bits):
        """rho(rho_inverse(x)) = x"""
        x = Enumeration.from_bits(bits)
        assert rho(rho_inverse(x)).emit(40) == x.emit(40)


class TestRhoPrime:
    """Test the alternative map that reads every run"""

    def test_typical_sequence_reads_everything(self):
        """A sequence listing all binary words has every short run"""
        word = "".join(format(i, "b") for i in range(1, 512))
        assert set(range(7)) <= rho_prime(word)

    def test_faithful_sequence_reads_x(self):
        """On faithful sequences rho' agrees with rho"""
        s = rho_inverse(Enumeration.from_bits([0, 1, 0, 1]))
        assert rho_prime(s.prefix(16)) == {1, 3}
