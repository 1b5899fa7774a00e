"""Tests for exact index values."""

from fractions import Fraction

import pytest

from scindex.values import IndexValue


class TestIndexValue:
    """Tests for IndexValue."""

    def test_canonical_form(self) -> None:
        """Test perfect powers collapse to lower degrees."""
        assert IndexValue(Fraction(36), 2) == IndexValue(6)
        assert IndexValue(Fraction(16), 4) == IndexValue.sqrt(4) == 2
        assert IndexValue(Fraction(32), 2).degree == 2

    def test_zero(self) -> None:
        """Test the empty-record value."""
        assert IndexValue.zero() == 0
        assert IndexValue(Fraction(0), 4).degree == 1

    def test_ordering_across_degrees(self) -> None:
        """Test exact comparison of roots of different degrees."""
        assert IndexValue.sqrt(32) < IndexValue(6)
        assert IndexValue.sqrt(40) > IndexValue(6)
        assert IndexValue(Fraction(638401, 273), 4) > IndexValue(Fraction(836 * 209, 105), 4)
        assert IndexValue(5) < 6
        assert IndexValue(5) == 5

    def test_multiplication(self) -> None:
        """Test exact products."""
        assert IndexValue.sqrt(2) * IndexValue.sqrt(2) == 2
        assert IndexValue.sqrt(5) * IndexValue.sqrt(5) == IndexValue(5)
        assert IndexValue.sqrt(2) * IndexValue(Fraction(2), 3) == IndexValue(Fraction(32), 6)
        assert 3 * IndexValue.sqrt(2) == IndexValue.sqrt(18)

    def test_power(self) -> None:
        """Test integer powers."""
        assert IndexValue.sqrt(2) ** 2 == 2
        assert IndexValue.sqrt(40).exact_power(2) == Fraction(40)

    def test_irrational_power(self) -> None:
        """Test error when a power is not rational."""
        with pytest.raises(ValueError, match="not rational"):
            IndexValue.sqrt(40).exact_power(3)

    def test_invalid(self) -> None:
        """Test validation of radicand and degree."""
        with pytest.raises(ValueError, match="non-negative"):
            IndexValue(Fraction(-1))
        with pytest.raises(ValueError, match="positive integer"):
            IndexValue(Fraction(4), 0)

    def test_hash_follows_equality(self) -> None:
        """Test equal values hash equally."""
        assert len({IndexValue(Fraction(36), 2), IndexValue(6)}) == 1

    def test_display(self) -> None:
        """Test exact and decimal text."""
        assert IndexValue.sqrt(40).exact_form() == "40^(1/2)"
        assert str(IndexValue(5)) == "5"
        assert IndexValue.sqrt(Fraction(1849, 21)).exact_form() == "1849/21^(1/2)"
        assert IndexValue.sqrt(40).decimal() == "6.32455532"
        assert float(IndexValue.sqrt(40)) == pytest.approx(6.32455532, abs=1e-8)
