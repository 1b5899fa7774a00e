"""Tests for the core module."""

from fractions import Fraction

import pytest

from scindex import CitationProfile
from scindex.core import DEFAULT_INDICES
from scindex.data import EXAMPLE_RECORD
from scindex.indices import ProportionBounds, RectangleWitness
from scindex.records import make_record
from scindex.values import IndexValue


class TestCitationProfile:
    """Tests for CitationProfile class."""

    def test_create_from_list(self) -> None:
        """Test creation from an unsorted raw list."""
        profile = CitationProfile([1, 11, 0, 7], researcher_id="r1")
        assert profile.record.entries == (11, 7, 1)
        assert profile.researcher_id == "r1"

    def test_create_from_record(self) -> None:
        """Test creation from an existing record."""
        record = make_record(EXAMPLE_RECORD)
        assert CitationProfile(record).record is record

    def test_invalid_citations(self) -> None:
        """Test error for negative counts."""
        with pytest.raises(ValueError, match="non-negative"):
            CitationProfile([3, -2])

    def test_classical_getters(self) -> None:
        """Test h, w, c, e and ē."""
        profile = CitationProfile(EXAMPLE_RECORD)
        assert profile.get_hirsch() == 5
        assert profile.get_woeginger() == 8
        assert profile.get_circle() == IndexValue.sqrt(40)
        assert profile.get_egghe() == 6
        assert profile.get_egghe_real() == IndexValue.sqrt(40)

    def test_scale_invariant_getters(self) -> None:
        """Test h′, w′ and c′."""
        profile = CitationProfile(EXAMPLE_RECORD)
        assert profile.get_hprime() == IndexValue.sqrt(32)
        assert profile.get_wprime() == IndexValue.sqrt(Fraction(1849, 21))
        assert profile.get_cprime() == IndexValue(Fraction(638401, 273), 4)
        assert profile.get_rectangle_witnesses() == [RectangleWitness(8, 4)]

    def test_bounds_apply_to_hprime(self) -> None:
        """Test proportion bounds reach both h′ and the batch evaluation."""
        profile = CitationProfile([10675] * 3, bounds=ProportionBounds(max_ratio=1))
        assert profile.get_hprime() == 3
        assert profile.get_all_indices("hprime") == {"hprime": IndexValue(3)}

    def test_get_all_indices_default(self) -> None:
        """Test the default battery keeps its order."""
        values = CitationProfile(EXAMPLE_RECORD).get_all_indices()
        assert tuple(values) == DEFAULT_INDICES
        assert values["sum"] == 61
        assert values["count"] == 15

    def test_get_all_indices_selection(self) -> None:
        """Test a comma-separated selection with a Hirsch power."""
        values = CitationProfile(EXAMPLE_RECORD).get_all_indices("w,h_1")
        assert values == {"w": IndexValue(8), "h_1": IndexValue(32)}

    def test_get_all_indices_unknown(self) -> None:
        """Test error for unknown index names."""
        with pytest.raises(ValueError, match="Unknown index"):
            CitationProfile(EXAMPLE_RECORD).get_all_indices("h,zeta")

    def test_get_summary(self) -> None:
        """Test the summary keys and tail shares."""
        summary = CitationProfile(EXAMPLE_RECORD, researcher_id="x").get_summary()
        assert summary["Researcher"] == "x"
        assert summary["Papers"] == 15
        assert summary["Total citations"] == 61
        assert summary["Square core"]["core"] == Fraction(25, 61)
        assert summary["Rectangle core"]["horizontal"] == Fraction(13, 61)

    def test_empty_profile(self) -> None:
        """Test every index is zero on the empty record."""
        profile = CitationProfile([])
        assert all(value == 0 for value in profile.get_all_indices().values())
        assert profile.get_summary()["Square core"]["core"] == 0

    def test_repr(self) -> None:
        """Test the text representation."""
        assert repr(CitationProfile([3, 1], "a")) == "CitationProfile('a', papers=2)"
