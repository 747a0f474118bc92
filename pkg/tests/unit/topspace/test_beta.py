"""Unit tests for beta module."""

import pytest

from compactlab.errors import CapacityError
from compactlab.topspace.beta import (
    beta,
    beta_is_extremal,
    clop_functor,
    clop_ring,
    discrete_target_maps,
    factor_through,
    image_is_dense,
    injective_when_dense,
    pi0_spec_check,
    tilde_partition,
)
from compactlab.topspace.corpus import enumerate_spaces
from compactlab.topspace.space import FiniteSpace


class TestBeta:
    def test_sierpinski_collapses_to_a_point(self, sierpinski):
        witness = beta(sierpinski)
        assert witness.partition == ((0, 1),)
        assert witness.projection == (0, 0)

    def test_discrete_space_is_its_own_compactification(self):
        witness = beta(FiniteSpace.discrete(3))
        assert witness.partition == ((0,), (1,), (2,))

    def test_indiscrete_space_collapses(self):
        assert beta(FiniteSpace.indiscrete(3)).partition == ((0, 1, 2),)

    def test_components_match_tilde_relation_on_three_points(self):
        for space in enumerate_spaces(3):
            assert tilde_partition(space) == tuple(space.components())

    def test_partition_is_extremal(self):
        space = FiniteSpace.from_preorder(3, [(0, 1)])
        witness = beta(space)
        assert witness.partition == ((0, 1), (2,))
        assert beta_is_extremal(space, witness.partition)

    def test_over_cap_raises(self):
        with pytest.raises(CapacityError):
            beta(FiniteSpace.discrete(7))

    def test_to_dict(self, sierpinski):
        assert beta(sierpinski).to_dict() == {"partition": [[0, 1]], "projection": [0, 0]}


class TestFactorThrough:
    def test_constant_map_factors(self, sierpinski):
        assert factor_through(beta(sierpinski), [1, 1]) == (1,)

    def test_non_constant_map_rejected(self, sierpinski):
        with pytest.raises(ValueError):
            factor_through(beta(sierpinski), [0, 1])

    def test_discrete_target_maps_are_constant_on_components(self, sierpinski):
        assert discrete_target_maps(sierpinski) == ((0, 0), (1, 1))


class TestClopRing:
    def test_sierpinski_clopen_ring_is_f2(self, sierpinski):
        clop = clop_ring(sierpinski)
        assert clop.sets == (0b00, 0b11)
        assert clop.ring.order == 2

    def test_discrete_clopen_ring_has_all_subsets(self):
        assert clop_ring(FiniteSpace.discrete(3)).ring.order == 8

    def test_components_are_maximal_ideals_of_clopen_ring(self, sierpinski):
        assert pi0_spec_check(sierpinski.disjoint_union(FiniteSpace.discrete(1)))
        for space in enumerate_spaces(3):
            assert pi0_spec_check(space)


class TestClopFunctor:
    def test_dense_inclusion_gives_injective_map(self, sierpinski):
        point = FiniteSpace.discrete(1)
        assert image_is_dense([1], sierpinski)
        assert clop_functor([1], point, sierpinski).is_injective
        assert injective_when_dense([1], point, sierpinski)

    def test_non_dense_inclusion_need_not_be_injective(self):
        point, pair = FiniteSpace.discrete(1), FiniteSpace.discrete(2)
        assert not image_is_dense([0], pair)
        assert not clop_functor([0], point, pair).is_injective
        assert injective_when_dense([0], point, pair)

    def test_discontinuous_map_rejected(self, sierpinski):
        with pytest.raises(ValueError):
            clop_functor([1, 0], sierpinski, sierpinski)
