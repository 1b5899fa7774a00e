"""Tests for choice functions and bar-graph selectors."""

import logging
from fractions import Fraction

import pytest

from scindex.choice import (
    ChoiceFunction,
    SetFamily,
    all_choice_functions,
    bargraph_argmax_selector,
    bargraph_mviia_check,
    check_implications,
    count_choice_functions,
    exhaustive_implication_check,
    rectangle_points,
    revealed_relations,
    satisfies_mviia,
    satisfies_mviia_star,
    satisfies_warp,
    selector_pair_check,
    triangle_contact_selector,
)
from scindex.data import EXAMPLE_RECORD
from scindex.indices import BUILTIN_INDICES, RectangleWitness
from scindex.records import EMPTY_RECORD, CitationRecord


def rec(*entries: int) -> CitationRecord:
    return CitationRecord(entries)


def alphabetical(family: SetFamily) -> ChoiceFunction:
    """Choose the first letter of every member."""
    return ChoiceFunction.maximizer(family, lambda e: -ord(e))


class TestSetFamily:
    """Tests for SetFamily."""

    def test_full_family(self) -> None:
        """Test the power set minus the empty set is closed."""
        family = SetFamily.all_nonempty_subsets("abc")
        assert len(family) == 7
        assert family.union_closed
        assert family.intersection_closed
        assert frozenset("ab") in family

    def test_closure_flags(self) -> None:
        """Test flags are computed from the members."""
        assert not SetFamily("abc", ["a", "b"]).union_closed
        family = SetFamily("abc", ["ab", "bc", "abc"])
        assert family.union_closed
        assert not family.intersection_closed

    def test_disjoint_members(self) -> None:
        """Test empty intersections do not break intersection closure."""
        assert SetFamily("ab", ["a", "b", "ab"]).intersection_closed

    def test_duplicates_ignored(self) -> None:
        """Test repeated members count once."""
        assert len(SetFamily("ab", ["ab", "ba", "a"])) == 2

    def test_invalid_members(self) -> None:
        """Test errors for empty or foreign members."""
        with pytest.raises(ValueError, match="nonempty"):
            SetFamily("ab", [""])
        with pytest.raises(ValueError, match="outside the universe"):
            SetFamily("ab", ["c"])


class TestChoiceFunction:
    """Tests for ChoiceFunction and its predicates."""

    def test_missing_choice(self) -> None:
        """Test every member needs a choice."""
        family = SetFamily("ab", ["a", "ab"])
        with pytest.raises(ValueError, match="No choice given"):
            ChoiceFunction(family, {"a": "a"})

    def test_choice_not_subset(self) -> None:
        """Test choices must be nonempty subsets."""
        family = SetFamily("ab", ["a"])
        with pytest.raises(ValueError, match="is not a nonempty subset"):
            ChoiceFunction(family, {"a": "b"})
        with pytest.raises(ValueError, match="is not a nonempty subset"):
            ChoiceFunction(family, {"a": ""})

    def test_maximizer_satisfies_everything(self) -> None:
        """Test choosing by a fixed ranking passes the three predicates."""
        family = SetFamily.all_nonempty_subsets("abc")
        c = alphabetical(family)
        assert c("bc") == frozenset("b")
        assert satisfies_mviia(family, c)
        assert satisfies_warp(family, c)
        assert satisfies_mviia_star(family, c)

    def test_hand_built_violation(self) -> None:
        """Test c(abc) = {a} with c(ab) = {b} fails MVIIA and WARP."""
        family = SetFamily.all_nonempty_subsets("abc")
        choices = dict(alphabetical(family).choices)
        choices[frozenset("ab")] = frozenset("b")
        c = ChoiceFunction(family, choices)
        check = satisfies_mviia(family, c)
        assert not check
        assert check.witness == {"F": ["'a'", "'b'", "'c'"], "G": ["'a'", "'b'"], "c(F)": ["'a'"], "c(G)": ["'b'"]}
        assert not satisfies_warp(family, c)

    def test_revealed_relations(self) -> None:
        """Test weak and strict revealed preferences."""
        family = SetFamily("ab", ["ab"])
        weak, strict = revealed_relations(family, ChoiceFunction(family, {"ab": "a"}))
        assert ("a", "b") in weak
        assert ("a", "b") in strict
        assert ("b", "a") not in weak

    def test_identity(self) -> None:
        """Test choosing everything is consistent."""
        family = SetFamily.all_nonempty_subsets("ab")
        c = ChoiceFunction.identity(family)
        assert satisfies_mviia(family, c)
        assert satisfies_warp(family, c)


class TestExhaustiveCheck:
    """Tests for the exhaustive implication check."""

    def test_counts(self) -> None:
        """Test 3 choice functions on two points and 189 on three."""
        assert count_choice_functions(SetFamily.all_nonempty_subsets("ab")) == 3
        assert count_choice_functions(SetFamily.all_nonempty_subsets("abc")) == 189
        assert len(list(all_choice_functions(SetFamily.all_nonempty_subsets("ab")))) == 3

    @pytest.mark.parametrize("size,functions,passing", [(1, 1, 1), (2, 3, 3), (3, 189, 13)])
    def test_implications_hold(self, size: int, functions: int, passing: int) -> None:
        """Test MVIIA implies WARP and MVIIA★ on every choice function."""
        report = exhaustive_implication_check(size)
        assert report.choice_functions == functions
        assert report.mviia_passing == passing
        assert report.implications_hold
        assert report.first_failure is None
        assert report.to_dict()["implications"]["hold"]

    def test_budget_guard(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test four points exceed the default budget."""
        with caplog.at_level(logging.WARNING, logger="scindex.choice"):
            with pytest.raises(ValueError, match="exceed the budget"):
                exhaustive_implication_check(4)
        assert "Refusing to enumerate" in caplog.text

    def test_invalid_universe(self) -> None:
        """Test error for empty universes."""
        with pytest.raises(ValueError, match="Universe size must be positive"):
            exhaustive_implication_check(0)

    def test_refuses_non_closed_families(self) -> None:
        """Test the closure preconditions."""
        with pytest.raises(ValueError, match="not closed under unions"):
            check_implications(SetFamily("ab", ["a", "b"]))
        with pytest.raises(ValueError, match="not closed under intersections"):
            check_implications(SetFamily("abc", ["ab", "bc", "abc"]))

    def test_explicit_functions(self) -> None:
        """Test checking a supplied list of functions."""
        family = SetFamily.all_nonempty_subsets("abc")
        report = check_implications(family, [alphabetical(family)])
        assert report.choice_functions == 1
        assert report.mviia_passing == 1


class TestBarGraphSelectors:
    """Tests for selectors on bar graphs."""

    def test_argmax_selector(self) -> None:
        """Test the maximal rectangle of the worked record."""
        assert bargraph_argmax_selector(CitationRecord(EXAMPLE_RECORD)) == {RectangleWitness(8, 4)}
        assert rectangle_points(rec(2, 1)) == {
            (Fraction(1), Fraction(2)),
            (Fraction(2), Fraction(1)),
        }

    def test_selectors_need_records(self) -> None:
        """Test errors on the empty record."""
        with pytest.raises(ValueError, match="nonempty record"):
            bargraph_argmax_selector(EMPTY_RECORD)
        with pytest.raises(ValueError, match="nonempty record"):
            triangle_contact_selector(EMPTY_RECORD)

    def test_triangle_contacts(self) -> None:
        """Test the maximal hypotenuse touches (5, 4) and (12, 1)."""
        contacts = triangle_contact_selector(CitationRecord(EXAMPLE_RECORD))
        assert contacts == {(Fraction(5), Fraction(4)), (Fraction(12), Fraction(1))}

    def test_pair_check(self) -> None:
        """Test (2, 2, 2, 2) below (4, 4, 2, 2) under both selectors."""
        small, large = rec(2, 2, 2, 2), rec(4, 4, 2, 2)
        assert selector_pair_check(small, large, rectangle_points) is None
        witness = selector_pair_check(small, large, triangle_contact_selector)
        assert witness["G"] == [2, 2, 2, 2]
        assert witness["phi(G)"] == [["0", "2"], ["4", "0"]]

    def test_rectangle_selector_holds(self) -> None:
        """Test MVIIA and the MaxB consequence for h′ on the 5 x 5 box."""
        report = bargraph_mviia_check(5, 5)
        assert report.holds
        assert report.comparable_pairs > 0
        assert report.all_pairs == 251 * 250 // 2

    def test_triangle_selector_fails(self) -> None:
        """Test the triangle selector breaks MVIIA and w′ breaks MaxB."""
        report = bargraph_mviia_check(
            4, 4, triangle_contact_selector, BUILTIN_INDICES["wprime"]
        )
        assert not report.holds
        assert report.mviia_failures > 0
        assert report.maxb_failures > 0
        assert report.to_dict()["index"] == "wprime"
