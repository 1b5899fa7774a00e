"""Tests for the citation indices."""

from fractions import Fraction

import pytest

from scindex.data import EXAMPLE_RECORD, NARROW_RECORD_RECTANGLE, STRETCH_INVERSION_PAIR
from scindex.indices import (
    BUILTIN_INDICES,
    EllipseWitness,
    ProportionBounds,
    RectangleWitness,
    TriangleWitness,
    circle,
    count_index,
    cprime,
    egghe,
    egghe_real,
    ellipse_fits,
    eprime,
    finite_to_one_bounds,
    get_index,
    hirsch,
    hirsch_power,
    hprime,
    optimal_ellipses,
    optimal_triangles,
    parse_index_list,
    records_with_hprime,
    rectangle_witnesses,
    sum_index,
    tail_decomposition,
    triangle_fits,
    woeginger,
    wprime,
)
from scindex.records import (
    EMPTY_RECORD,
    CitationRecord,
    cumulatively_dominates,
    dual,
    enumerate_records,
    hstretch,
    total_citations,
    vscale,
)
from scindex.values import IndexValue

X = CitationRecord(EXAMPLE_RECORD)


def rec(*entries: int) -> CitationRecord:
    return CitationRecord(entries)


class TestExampleBattery:
    """Tests for the worked 15-paper record."""

    def test_classical_indices(self) -> None:
        """Test h, w, c, e and ē."""
        assert hirsch(X) == 5
        assert woeginger(X) == 8
        assert circle(X) == IndexValue.sqrt(40)
        assert circle(X).decimal() == "6.32455532"
        assert egghe(X) == 6
        assert egghe_real(X) == IndexValue.sqrt(40)

    def test_hprime(self) -> None:
        """Test h′ = sqrt(32) with the 8 x 4 rectangle."""
        assert hprime(X) == IndexValue.sqrt(32)
        assert rectangle_witnesses(X) == [RectangleWitness(8, 4)]
        assert rectangle_witnesses(X)[0].area == 32

    def test_wprime_optimum(self) -> None:
        """Test the maximal triangle touches (5, 4) and (12, 1)."""
        assert optimal_triangles(X) == [TriangleWitness(Fraction(43, 3), Fraction(43, 7))]
        assert wprime(X) == IndexValue.sqrt(Fraction(1849, 21))

    def test_quoted_triangle_is_dominated(self) -> None:
        """Test the triangle with legs 11 and 22/3 fits but is smaller."""
        assert triangle_fits(X, Fraction(11), Fraction(22, 3))
        assert IndexValue.sqrt(Fraction(242, 3)).decimal(5) == "8.98146"
        assert IndexValue.sqrt(Fraction(242, 3)) < wprime(X)
        assert not triangle_fits(X, Fraction(43, 3), Fraction(44, 7))

    def test_cprime_optimum(self) -> None:
        """Test the maximal quarter ellipse touches (5, 4) and (8, 3)."""
        assert optimal_ellipses(X) == [EllipseWitness(Fraction(799, 7), Fraction(799, 39))]
        assert cprime(X) == IndexValue(Fraction(638401, 273), 4)

    def test_quoted_ellipse_is_dominated(self) -> None:
        """Test the ellipse through (2, 6) and (5, 4) fits but is smaller."""
        quoted = IndexValue(Fraction(836, 21) * Fraction(209, 5), 4)
        assert ellipse_fits(X, Fraction(209, 5), Fraction(836, 21))
        assert float(quoted) == pytest.approx(6.38691029, abs=1e-7)
        assert quoted < cprime(X)

    def test_reference_indices(self) -> None:
        """Test e′, sum and count."""
        assert eprime(X) == IndexValue.sqrt(61)
        assert sum_index(X) == 61
        assert count_index(X) == 15


class TestSmallRecords:
    """Tests for small hand-checked records."""

    @pytest.mark.parametrize(
        "entries,h,w",
        [((), 0, 0), ((1,), 1, 1), ((3, 3), 2, 2), ((8, 6, 2), 2, 3), ((4, 4, 2, 2), 2, 4)],
    )
    def test_hirsch_and_woeginger(self, entries: tuple, h: int, w: int) -> None:
        """Test h and w on small records."""
        assert hirsch(CitationRecord(entries)) == h
        assert woeginger(CitationRecord(entries)) == w

    def test_circle(self) -> None:
        """Test the quarter disc radius."""
        assert circle(rec(1)) == 1
        assert circle(rec(3, 3)) == 2
        assert circle(EMPTY_RECORD) == 0

    def test_egghe_cap(self) -> None:
        """Test Egghe on (8, 6, 2) and its dual."""
        assert egghe(rec(8, 6, 2)) == 3
        assert egghe(dual(rec(8, 6, 2))) == 2
        assert egghe(rec(8, 6, 2), allow_beyond_length=True) == 4
        assert egghe_real(rec(8, 6, 2)) == 4
        assert egghe_real(rec(1)) == 1

    def test_rectangle_ties(self) -> None:
        """Test every maximizing corner is reported."""
        assert rectangle_witnesses(rec(2, 1)) == [RectangleWitness(1, 2), RectangleWitness(2, 1)]
        assert rectangle_witnesses(rec(1)) == [RectangleWitness(1, 1)]
        assert rectangle_witnesses(EMPTY_RECORD) == []

    def test_wprime_small(self) -> None:
        """Test w′ on records with integral optima."""
        assert wprime(rec(4, 4, 2, 2)) == 4
        assert wprime(rec(2)) == IndexValue.sqrt(2)
        assert wprime(rec(1)) == 1
        assert wprime(EMPTY_RECORD) == 0

    def test_cprime_single_paper(self) -> None:
        """Test c′ on (1)."""
        assert cprime(rec(1)) == 1
        assert cprime(EMPTY_RECORD) == 0

    def test_narrow_record(self) -> None:
        """Test the tall 3-paper record."""
        width, height = NARROW_RECORD_RECTANGLE
        x = CitationRecord((height,) * width)
        assert hirsch(x) == 3
        assert float(hprime(x)) == pytest.approx(178.96, abs=0.01)


class TestHirschPower:
    """Tests for h_a and proportion bounds."""

    def test_powers(self) -> None:
        """Test exact powers of the maximal area."""
        assert hirsch_power(X, 1) == 32
        assert hirsch_power(X, "1/2") == hprime(X)
        assert hirsch_power(X, "3/2") == IndexValue(Fraction(32**3), 2)

    def test_invalid_exponent(self) -> None:
        """Test error for non-positive exponents."""
        with pytest.raises(ValueError, match="positive"):
            hirsch_power(X, 0)

    def test_max_ratio(self) -> None:
        """Test height:width at most 1 turns h′ into h on a tall record."""
        x = rec(10675, 10675, 10675)
        assert hprime(x, ProportionBounds(max_ratio=1)) == 3

    def test_min_ratio(self) -> None:
        """Test height:width at least 1 on a flat record."""
        x = rec(1, 1, 1, 1)
        assert hprime(x) == 2
        assert hprime(x, ProportionBounds(min_ratio=1)) == 1

    def test_fractional_width(self) -> None:
        """Test admissible widths inside a column."""
        assert hprime(rec(3, 3), ProportionBounds(min_ratio=2)) == IndexValue.sqrt(Fraction(9, 2))

    def test_invalid_bounds(self) -> None:
        """Test validation of proportion bounds."""
        with pytest.raises(ValueError, match="positive"):
            ProportionBounds(min_ratio=0)
        with pytest.raises(ValueError, match="exceeds"):
            ProportionBounds(min_ratio=2, max_ratio=1)


class TestInvariances:
    """Tests for symmetry and scaling laws over the enumeration."""

    @pytest.mark.parametrize("name", ["h", "w", "c", "hprime", "wprime", "cprime"])
    def test_dual_invariance(self, name: str) -> None:
        """Test g(x*) = g(x) on the 5 x 5 box."""
        g = BUILTIN_INDICES[name]
        for x in enumerate_records(5, 5):
            assert g(dual(x)) == g(x), x

    @pytest.mark.parametrize("name", ["hprime", "wprime", "cprime"])
    def test_scaling_laws(self, name: str) -> None:
        """Test g(kx)² = k·g(x)² and g(x stretched by m)² = m·g(x)²."""
        g = BUILTIN_INDICES[name]
        for x in enumerate_records(6, 6):
            value = g(x)
            for k in (1, 2, 3):
                assert g(vscale(x, k)) == IndexValue.sqrt(k) * value, (x, k)
                assert g(hstretch(x, k)) == IndexValue.sqrt(k) * value, (x, k)

    def test_stretch_inverts_hirsch_ranking(self) -> None:
        """Test stretching by 3 reverses h but not h′."""
        c, d = (CitationRecord(STRETCH_INVERSION_PAIR[key]) for key in ("C", "D"))
        c3, d3 = hstretch(c, 3), hstretch(d, 3)
        assert (hirsch(c), hirsch(d), hirsch(c3), hirsch(d3)) == (6, 4, 8, 11)
        assert hprime(c) < hprime(d)
        assert hprime(c3) < hprime(d3)


class TestEggheOracle:
    """Tests for the alternate definitions of e and e′."""

    def test_egghe_matches_cumulative_search(self) -> None:
        """Test e equals the best h over cumulatively dominated records."""
        candidates = list(enumerate_records(6, 6))
        for x in enumerate_records(4, 6):
            if x.is_empty:
                continue
            dominated = [y for y in candidates if cumulatively_dominates(x, y)]
            assert egghe(x, allow_beyond_length=True) == max(hirsch(y) for y in dominated), x
            same_length = [y for y in dominated if len(y) == len(x)]
            assert egghe(x) == max(hirsch(y) for y in same_length), x

    def test_eprime_matches_cumulative_search(self) -> None:
        """Test the best h′ over cumulatively dominated records is sqrt of the total."""
        candidates = list(enumerate_records(9, 3))
        for x in enumerate_records(3, 3):
            if x.is_empty:
                continue
            best = max(hprime(y) for y in candidates if cumulatively_dominates(x, y))
            assert best == eprime(x) == IndexValue.sqrt(total_citations(x)), x


class TestBoundsAndTails:
    """Tests for the finite-to-one bounds and tail decomposition."""

    def test_bounds_twelve(self) -> None:
        """Test the exact and approximate bounds at v = 12."""
        lower, upper, approx = finite_to_one_bounds(12)
        assert lower == 144
        assert upper == 746
        assert abs(round(approx) - 859) <= 1

    @pytest.mark.parametrize("v", [1, 2, 3, 4])
    def test_records_within_bounds(self, v: int) -> None:
        """Test every record with h′ = v has total citations in range."""
        lower, upper, _ = finite_to_one_bounds(v)
        records = list(records_with_hprime(v))
        assert records
        for x in records:
            assert hprime(x) == v
            assert lower <= total_citations(x) <= upper
        assert max(total_citations(x) for x in records) == upper

    def test_single_record_for_one(self) -> None:
        """Test h′ = 1 only for (1)."""
        assert list(records_with_hprime(1)) == [rec(1)]

    def test_invalid_value(self) -> None:
        """Test error for v < 1."""
        with pytest.raises(ValueError, match="positive"):
            finite_to_one_bounds(0)

    def test_tail_decomposition(self) -> None:
        """Test the square and rectangle cores of the worked record."""
        square = tail_decomposition(X, "square")
        assert (square.core, square.vertical, square.horizontal) == (25, 11, 25)
        rectangle = tail_decomposition(X, "rectangle")
        assert (rectangle.core, rectangle.vertical, rectangle.horizontal) == (32, 16, 13)
        assert rectangle.total == 61
        assert sum(rectangle.shares().values()) == 1

    def test_tail_decomposition_invalid_shape(self) -> None:
        """Test error for unknown core shapes."""
        with pytest.raises(ValueError, match="Unknown core shape"):
            tail_decomposition(X, "circle")


class TestRegistry:
    """Tests for index lookup."""

    def test_get_builtin(self) -> None:
        """Test lookup of built-in names."""
        assert get_index("hprime")(X) == IndexValue.sqrt(32)
        assert get_index(" w ")(X) == 8

    def test_hirsch_power_names(self) -> None:
        """Test the h_<a> form."""
        assert get_index("h_1").name == "h_1"
        assert get_index("h_1")(X) == 32

    def test_unknown_name(self) -> None:
        """Test the error lists the valid names."""
        with pytest.raises(ValueError, match="Valid names: h, w"):
            get_index("nope")

    def test_parse_list(self) -> None:
        """Test comma-separated lists keep order and skip blanks."""
        assert [d.name for d in parse_index_list("w,,hprime")] == ["w", "hprime"]
        with pytest.raises(ValueError, match="At least one"):
            parse_index_list(" , ")

    def test_bounded_hprime_lookup(self) -> None:
        """Test bounds reach hprime through the registry."""
        bounds = ProportionBounds(max_ratio=1)
        assert get_index("hprime", bounds)(rec(10675, 10675, 10675)) == 3
