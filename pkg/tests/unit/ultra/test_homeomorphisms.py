"""Unit tests for the maps from Spec P(X) onto Min and Max."""

import pytest

from compactlab.errors import CapacityError
from compactlab.rings.atoms import LocalAtom
from compactlab.rings.ideals import principal_ideal
from compactlab.rings.product import product
from compactlab.rings.table import cyclic
from compactlab.spectrum.topology import FiniteTopology
from compactlab.ultra.homeomorphisms import (
    PointMap,
    composite_sends_kernels_to_maximals,
    delta_isolates,
    flat_homeomorphism,
    star_homeomorphism,
)
from compactlab.ultra.three_spaces import residue_field, three_spaces
from compactlab.ultra.universal import all_maps_factor, stone_cech_universal_check


class TestPointMap:
    def test_swap_is_a_homeomorphism_of_discrete_spaces(self):
        discrete = FiniteTopology.discrete(2)
        swap = PointMap((1, 0), discrete, discrete)
        assert swap.is_homeomorphism()
        assert swap.inverse().images == (1, 0)
        assert swap.then(swap).images == (0, 1)

    def test_identity_onto_indiscrete_is_not_open(self):
        identity = PointMap((0, 1), FiniteTopology.discrete(2), FiniteTopology.indiscrete(2))
        assert identity.is_continuous()
        assert not identity.is_open_map()

    def test_non_bijection_has_no_inverse(self):
        discrete = FiniteTopology.discrete(2)
        with pytest.raises(ValueError):
            PointMap((0, 0), discrete, discrete).inverse()


class TestSpecHomeomorphisms:
    def test_star_map_onto_min_of_fields(self, fields_2357):
        assert star_homeomorphism(4, fields_2357).holds

    def test_flat_map_onto_max_of_local_rings(self, z4_z9):
        result = flat_homeomorphism(2, z4_z9)
        assert result.holds
        assert delta_isolates(z4_z9, result.site, result.eta)

    def test_composite_matches_kernels_with_maximals(self, z6, z4_z9):
        star = star_homeomorphism(2, z6)
        flat = flat_homeomorphism(2, z4_z9)
        assert composite_sends_kernels_to_maximals(star, flat)

    def test_star_map_needs_fields(self, z4_z9):
        with pytest.raises(ValueError):
            star_homeomorphism(2, z4_z9)

    def test_label_count_must_match(self, z6):
        with pytest.raises(ValueError):
            star_homeomorphism(3, z6)


class TestUniversalProperty:
    def test_single_map_extends_uniquely(self, z6):
        witness = stone_cech_universal_check(z6, 2, (0, 1))
        assert witness.unique
        assert witness.factors

    def test_every_map_from_three_points_factors(self):
        fields = product([LocalAtom(2), LocalAtom(3), LocalAtom(5)], ["a", "b", "c"])
        witnesses = all_maps_factor(fields, 2)
        assert len(witnesses) == 8
        assert all(witness.unique for witness in witnesses)

    def test_flat_extensions_through_max(self, z4_z9):
        witnesses = all_maps_factor(z4_z9, 3, "flat")
        assert len(witnesses) == 9
        assert all(witness.unique for witness in witnesses)

    def test_map_outside_target_rejected(self, z6):
        with pytest.raises(ValueError):
            stone_cech_universal_check(z6, 2, (0, 5))

    def test_target_over_cap(self, z6):
        with pytest.raises(CapacityError):
            stone_cech_universal_check(z6, 5, (0, 1))


class TestThreeSpaces:
    def test_z6_spaces_are_homeomorphic(self, z6_table):
        witness = three_spaces(z6_table)
        assert witness.homeomorphic
        assert witness.to_dict() == {
            "primes": 2,
            "min": 2,
            "spec": 2,
            "max": 2,
            "homeomorphic": True,
        }

    def test_product_of_local_rings(self, z4_z9):
        assert three_spaces(z4_z9).homeomorphic

    def test_zero_ring_rejected(self):
        with pytest.raises(ValueError):
            three_spaces(cyclic(1))

    def test_residue_field_of_z4(self):
        z4 = cyclic(4)
        assert residue_field(z4, principal_ideal(z4, 2)).order == 2
