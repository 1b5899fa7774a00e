"""Tests for utility functions."""

from fractions import Fraction

import pytest

from scindex.utils import (
    exact_nth_root,
    factorize,
    format_decimal,
    integer_nth_root,
    parse_rational,
    substitute_prime,
)


class TestRoots:
    """Tests for integer roots."""

    @pytest.mark.parametrize(
        "value,n,expected",
        [(0, 2, 0), (1, 3, 1), (40, 2, 6), (36, 2, 6), (27, 3, 3), (26, 3, 2), (10**40, 4, 10**10)],
    )
    def test_integer_nth_root(self, value: int, n: int, expected: int) -> None:
        """Test floor of the n-th root."""
        assert integer_nth_root(value, n) == expected

    def test_exact_nth_root(self) -> None:
        """Test exact roots and non-roots."""
        assert exact_nth_root(625, 4) == 5
        assert exact_nth_root(40, 2) is None

    def test_negative_value(self) -> None:
        """Test error for negative values."""
        with pytest.raises(ValueError, match="negative"):
            integer_nth_root(-4, 2)

    def test_invalid_degree(self) -> None:
        """Test error for degree below 1."""
        with pytest.raises(ValueError, match="degree"):
            integer_nth_root(4, 0)


class TestFactorize:
    """Tests for prime factorization and prime substitution."""

    def test_factorize(self) -> None:
        """Test a composite number."""
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert factorize(1) == {}

    def test_factorize_invalid(self) -> None:
        """Test error for non-positive input."""
        with pytest.raises(ValueError, match="positive"):
            factorize(0)

    @pytest.mark.parametrize(
        "n,expected",
        [(3, 5), (4, 4), (9, 25), (12, 20), (7, 7), (15, 25), (45, 125), (30, 50)],
    )
    def test_substitute_prime(self, n: int, expected: int) -> None:
        """Test replacing the power of 3 by the same power of 5."""
        assert substitute_prime(n, 3, 5) == expected

    def test_substitute_prime_merges_exponents(self) -> None:
        """Test the new prime adds to an exponent already present."""
        assert substitute_prime(15, 3, 5) == substitute_prime(25, 3, 5) == 25
        assert substitute_prime(75, 3, 5) == 5**3


class TestParsing:
    """Tests for rational parsing and decimal formatting."""

    def test_parse_decimal_text(self) -> None:
        """Test decimal text is exact."""
        assert parse_rational("0.2") == Fraction(1, 5)
        assert parse_rational("22/3") == Fraction(22, 3)

    def test_parse_float(self) -> None:
        """Test floats go through their shortest decimal form."""
        assert parse_rational(0.125) == Fraction(1, 8)
        assert parse_rational(0.32) == Fraction(8, 25)

    def test_parse_invalid(self) -> None:
        """Test error for text that is not a number."""
        with pytest.raises(ValueError, match="Not a rational"):
            parse_rational("abc")

    def test_format_sqrt(self) -> None:
        """Test eight-place display of sqrt(40)."""
        assert format_decimal(Fraction(40), 2) == "6.32455532"

    def test_format_integer(self) -> None:
        """Test integers are padded to eight places."""
        assert format_decimal(Fraction(5)) == "5.00000000"

    def test_format_half_even(self) -> None:
        """Test ties round to even."""
        assert format_decimal(Fraction(1, 8), 1, 2) == "0.12"
        assert format_decimal(Fraction(3, 8), 1, 2) == "0.38"
