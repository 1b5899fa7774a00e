"""Tests for the deterministic career model."""

from fractions import Fraction

import pytest

from scindex.growth import (
    DeterministicParams,
    build_trajectory,
    deterministic_record,
    fitted_slope,
    minimal_strip,
    strip_width_is_stable,
    monthly_deterministic_record,
    parse_params,
    strip_check,
    strip_spec,
)
from scindex.indices import BUILTIN_INDICES, get_index
from scindex.values import IndexValue

H = BUILTIN_INDICES["h"]


class TestDeterministicParams:
    """Tests for DeterministicParams."""

    def test_exact_parameters(self) -> None:
        """Test decimal text becomes exact fractions."""
        params = parse_params("0.125", "0.32", "month")
        assert params.p == Fraction(1, 8)
        assert params.c == Fraction(8, 25)
        assert not params.cite_same_period
        assert not params.is_integral

    def test_annual_default(self) -> None:
        """Test the annual model cites papers in their first year."""
        params = DeterministicParams(2, 3)
        assert params.cite_same_period
        assert params.is_integral
        assert params.birth(3) == 2

    @pytest.mark.parametrize("p,c", [(0, 1), (1, -1)])
    def test_invalid_rates(self, p: int, c: int) -> None:
        """Test error for non-positive rates."""
        with pytest.raises(ValueError, match="must be positive"):
            DeterministicParams(p, c)

    def test_invalid_period(self) -> None:
        """Test error for unknown periods."""
        with pytest.raises(ValueError, match="Unknown period"):
            DeterministicParams(1, 1, "week")


class TestRecords:
    """Tests for x(n) in both models."""

    def test_annual_record(self) -> None:
        """Test p = 2, c = 3 after three years."""
        record = deterministic_record(DeterministicParams(2, 3), 3)
        assert record.entries == (9, 9, 6, 6, 3, 3)

    def test_annual_invalid_year(self) -> None:
        """Test error for n < 1."""
        with pytest.raises(ValueError, match="at least 1"):
            deterministic_record(DeterministicParams(1, 1), 0)

    def test_monthly_record(self) -> None:
        """Test papers wait one month before being cited."""
        params = DeterministicParams(Fraction(1, 2), 1, "month")
        assert monthly_deterministic_record(params, 1).is_empty
        assert monthly_deterministic_record(params, 2).is_empty
        assert monthly_deterministic_record(params, 5).entries == (3, 1)

    def test_monthly_needs_month_period(self) -> None:
        """Test error when the period is annual."""
        with pytest.raises(ValueError, match="period='month'"):
            monthly_deterministic_record(DeterministicParams(1, 1), 3)

    def test_monthly_hirsch_at_thirty_years(self) -> None:
        """Test h after 360 months for A and for B with 10% higher rates."""
        a = DeterministicParams(Fraction(1, 8), Fraction(8, 25), "month")
        b = DeterministicParams(Fraction(11, 80), Fraction(44, 125), "month")
        assert H(monthly_deterministic_record(a, 360)) == 32
        assert H(monthly_deterministic_record(b, 360)) == 35


class TestTrajectory:
    """Tests for CareerTrajectory built from the model."""

    def test_hirsch_alternates(self) -> None:
        """Test h grows by one every other year when p = c = 1."""
        trajectory = build_trajectory(DeterministicParams(1, 1), 10, [H])
        assert trajectory.series("h") == [IndexValue(v) for v in (1, 1, 2, 2, 3, 3, 4, 4, 5, 5)]
        series = trajectory.series("h")
        assert sum(1 for a, b in zip(series, series[1:]) if a != b) == 4
        assert trajectory.is_monotone("h")
        assert trajectory.provenance["model"] == "deterministic"

    def test_untracked_index(self) -> None:
        """Test error for series that were not evaluated."""
        trajectory = build_trajectory(DeterministicParams(1, 1), 3, [H])
        with pytest.raises(ValueError, match="not tracked"):
            trajectory.series("w")

    def test_invalid_horizon(self) -> None:
        """Test error for horizon < 1."""
        with pytest.raises(ValueError, match="Horizon"):
            build_trajectory(DeterministicParams(1, 1), 0, [H])

    def test_fitted_slope(self) -> None:
        """Test w grows at min(p, c) per year."""
        trajectory = build_trajectory(DeterministicParams(2, 3), 15, [BUILTIN_INDICES["w"]])
        assert fitted_slope(trajectory, "w") == pytest.approx(2.0)


class TestStrips:
    """Tests for the linear growth strips."""

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    @pytest.mark.parametrize("name", ["h", "hprime", "w", "wprime"])
    def test_anchored_strip_holds(self, name: str, p: int, c: int) -> None:
        """Test s·n <= g(x(n)) <= s·n + d over 30 years."""
        report = strip_check(BUILTIN_INDICES[name], DeterministicParams(p, c), 30)
        assert report.mode == "anchored"
        assert report.holds, report.to_dict()

    @pytest.mark.parametrize("p,c", [(1, 1), (2, 3), (4, 1)])
    def test_exact_lines(self, p: int, c: int) -> None:
        """Test w and w′ sit exactly on their lines."""
        params = DeterministicParams(p, c)
        trajectory = build_trajectory(
            params, 12, [BUILTIN_INDICES["w"], BUILTIN_INDICES["wprime"]]
        )
        for n, w, wprime in zip(
            trajectory.times, trajectory.series("w"), trajectory.series("wprime")
        ):
            assert w == min(p, c) * n
            assert wprime == IndexValue.sqrt(p * c) * n

    def test_strip_spec(self) -> None:
        """Test closed-form slopes and widths."""
        assert strip_spec("h", Fraction(2), Fraction(3)).slope == Fraction(6, 5)
        assert strip_spec("hprime", Fraction(1), Fraction(1)).slope == Fraction(1, 2)
        assert strip_spec("w", Fraction(2), Fraction(3)).offset == 0
        with pytest.raises(ValueError, match="No closed-form strip"):
            strip_spec("e", Fraction(1), Fraction(1))

    def test_h1_escapes(self) -> None:
        """Test the quadratic h_1 fails the empirical strip."""
        report = strip_check(get_index("h_1"), DeterministicParams(1, 1), 40)
        assert report.mode == "empirical"
        assert not report.holds
        assert report.width > 2 * report.half_width + 1

    def test_egghe_empirical(self) -> None:
        """Test e stays in a strip of stable width."""
        report = strip_check(BUILTIN_INDICES["e"], DeterministicParams(1, 1), 40)
        assert report.mode == "empirical"
        assert report.holds

    @pytest.mark.parametrize(
        "width,half_width,stable",
        [(0.9, 0.0, True), (3.0, 1.0, True), (3.1, 1.0, False), (40.0, 10.0, False)],
    )
    def test_width_rule(self, width: float, half_width: float, stable: bool) -> None:
        """Test the doubling-plus-one rule on strip widths."""
        assert strip_width_is_stable(width, half_width) is stable

    def test_width_rule_on_sequences(self) -> None:
        """Test floors of a line pass and squares fail."""
        times = list(range(1, 41))
        floors = [n // 3 for n in times]
        squares = [n * n for n in times]
        _, width = minimal_strip(times, floors)
        _, half_width = minimal_strip(times[:20], floors[:20])
        assert width < 1
        assert strip_width_is_stable(width, half_width)
        _, width = minimal_strip(times, squares)
        _, half_width = minimal_strip(times[:20], squares[:20])
        assert not strip_width_is_stable(width, half_width)

    def test_fractional_rates_rejected(self) -> None:
        """Test strip checks need integer rates on the annual model."""
        with pytest.raises(ValueError, match="integer p, c"):
            strip_check(H, DeterministicParams(Fraction(1, 2), 1), 10)

    def test_minimal_strip(self) -> None:
        """Test points on a line and a tent."""
        slope, width = minimal_strip([1, 2, 3], [1, 2, 3])
        assert slope == pytest.approx(1.0)
        assert width == pytest.approx(0.0)
        assert minimal_strip([1, 2, 3], [0, 1, 0]) == pytest.approx((0.0, 1.0))
        assert minimal_strip([1], [5]) == (0.0, 0.0)
