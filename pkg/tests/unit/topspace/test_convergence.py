"""Unit tests for convergence module."""

import pytest

from compactlab.topspace.convergence import (
    continuous_via_convergence,
    convergence_relation,
    converges,
    is_continuous,
    open_via_convergence,
    preimage,
    pushforward_point,
)
from compactlab.topspace.corpus import enumerate_spaces
from compactlab.topspace.space import FiniteSpace


class TestConvergence:
    def test_open_point_converges_to_closed_point(self, sierpinski):
        assert converges(sierpinski, 1, 0)
        assert not converges(sierpinski, 0, 1)

    def test_relation_pairs(self, sierpinski):
        relation = convergence_relation(sierpinski)
        assert relation.sorted_pairs() == [[0, 0], [1, 0], [1, 1]]
        assert relation.limits_of(1) == [0, 1]

    def test_open_sets_recovered_from_convergence(self, sierpinski):
        found = {s for s in range(4) if open_via_convergence(sierpinski, s)}
        assert found == {0b00, 0b10, 0b11}

    def test_convergence_matches_closure_on_three_points(self):
        for space in enumerate_spaces(3):
            for y in range(3):
                for x in range(3):
                    converges(space, y, x)


class TestContinuity:
    def test_identity_and_constants(self, sierpinski):
        assert is_continuous([0, 1], sierpinski, sierpinski)
        assert is_continuous([0, 0], sierpinski, sierpinski)

    def test_swap_is_not_continuous(self, sierpinski):
        assert not is_continuous([1, 0], sierpinski, sierpinski)
        assert not continuous_via_convergence([1, 0], sierpinski, sierpinski)

    def test_criterion_agrees_on_maps_into_sierpinski(self, sierpinski):
        source = FiniteSpace.from_preorder(3, [(0, 1), (2, 1)])
        for a in range(2):
            for b in range(2):
                for c in range(2):
                    mapping = [a, b, c]
                    expected = is_continuous(mapping, source, sierpinski)
                    assert continuous_via_convergence(mapping, source, sierpinski) == expected

    def test_malformed_map_raises(self, sierpinski):
        with pytest.raises(ValueError):
            is_continuous([0, 2], sierpinski, sierpinski)
        with pytest.raises(ValueError):
            is_continuous([0], sierpinski, sierpinski)

    def test_preimage(self):
        assert preimage([1, 0, 1], 0b10) == 0b101

    def test_pushforward_of_principal_point(self):
        assert pushforward_point([0, 0, 1], 2, 2) == 1
        assert pushforward_point([0, 0, 1], 2, 1) == 0
