"""Unit tests for the spectrum of a finite power set ring."""

import pytest

from compactlab.errors import CapacityError
from compactlab.stone.finite import (
    UltrafilterView,
    all_principal_ultrafilters,
    basic_opens_correspond,
    brute_force_maximal_ideals,
    ideal_from_ultrafilter,
    principal_members,
    spec_finite_boolean,
    ultrafilter_view,
)
from compactlab.stone.homs import count_ring_maps
from compactlab.stone.points import ExplicitMaxIdeal


class TestSpecFiniteBoolean:
    def test_three_discrete_points(self):
        spectrum = spec_finite_boolean(3)
        assert len(spectrum.points) == 3
        assert spectrum.is_discrete

    def test_points_are_principal_in_order(self):
        spectrum = spec_finite_boolean(3)
        for x, point in enumerate(spectrum.points):
            assert point.members == principal_members(3, x)

    def test_basic_opens_match_ultrafilters(self):
        assert basic_opens_correspond(spec_finite_boolean(3))

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_every_ultrafilter_is_principal(self, size):
        assert all_principal_ultrafilters(size)

    def test_over_cap_raises(self):
        with pytest.raises(CapacityError):
            spec_finite_boolean(6)


class TestBruteForce:
    def test_matches_principal_ideals(self):
        found = brute_force_maximal_ideals(2)
        assert set(found) == {principal_members(2, 0), principal_members(2, 1)}

    def test_three_point_universe(self):
        assert len(brute_force_maximal_ideals(3)) == 3

    def test_over_cap_raises(self):
        with pytest.raises(CapacityError):
            brute_force_maximal_ideals(4)


class TestUltrafilters:
    def test_round_trip(self):
        point = spec_finite_boolean(2).points[1]
        view = ultrafilter_view(point)
        assert view.principal_at() == 1
        assert ideal_from_ultrafilter(view) == point

    def test_non_maximal_ideal_rejected(self):
        with pytest.raises(ValueError):
            ultrafilter_view(ExplicitMaxIdeal(2, frozenset({0})))

    def test_family_without_complements_rejected(self):
        with pytest.raises(ValueError):
            UltrafilterView(2, frozenset({0b11}))


class TestRingMapCounts:
    @pytest.mark.parametrize(
        ("source", "target", "count"), [(2, 1, 2), (1, 3, 1), (3, 2, 9), (2, 2, 4)]
    )
    def test_counts_are_source_to_the_target(self, source, target, count):
        result = count_ring_maps(source, target)
        assert result.count == count
        assert result.count == result.expected

    def test_set_maps_listed(self):
        assert count_ring_maps(2, 1).set_maps == ((0,), (1,))

    def test_over_cap_raises(self):
        with pytest.raises(CapacityError):
            count_ring_maps(4, 1)
