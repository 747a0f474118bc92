"""Unit tests for constructions module."""

from unittest.mock import patch

import pytest

from compactlab.errors import CapacityError
from compactlab.rings.constructions import (
    RingMap,
    brute_force_nilpotent_products,
    localize,
    localize_at_prime,
    quotient,
)
from compactlab.rings.ideals import MultSet, enumerate_mult_sets, principal_ideal
from compactlab.rings.table import cyclic


class TestQuotient:
    def test_z6_mod_two_is_z2(self, z6_table):
        projection = quotient(z6_table, principal_ideal(z6_table, 2))
        assert projection.target.order == 2
        assert projection.is_surjective()
        assert projection.is_ring_homomorphism()
        assert projection.kernel().members == (0, 2, 4)

    def test_unit_ideal_gives_zero_ring(self, z6_table):
        projection = quotient(z6_table, principal_ideal(z6_table, 1))
        assert projection.target.is_zero_ring

    def test_result_over_cap_raises(self, z6_table):
        with pytest.raises(CapacityError):
            quotient(z6_table, principal_ideal(z6_table, 0), cap=3)

    def test_composition_of_projections(self, z6_table):
        first = quotient(z6_table, principal_ideal(z6_table, 0))
        second = quotient(first.target, principal_ideal(first.target, first(3)))
        composite = first.compose(second)
        assert composite.target.order == 3
        assert composite.is_ring_homomorphism()


class TestLocalize:
    def test_inverting_three_in_z6_gives_order_two(self, z6_table):
        localization = localize(z6_table, MultSet.generated(z6_table, [3]))
        assert localization.ring.order == 2
        assert localization.kernel().members == (0, 2, 4)

    def test_kernel_matches_nilpotent_products(self, z6_table):
        mult_set = MultSet.generated(z6_table, [3])
        localization = localize(z6_table, mult_set)
        assert localization.radical_kernel() == brute_force_nilpotent_products(z6_table, mult_set)

    def test_fractions_with_invertible_denominator(self, z6_table):
        localization = localize(z6_table, MultSet.generated(z6_table, [3]))
        assert localization.fraction(1, 3) == localization.canonical(1)

    def test_denominator_outside_set_raises(self, z6_table):
        localization = localize(z6_table, MultSet.generated(z6_table, [3]))
        with pytest.raises(ValueError):
            localization.fraction(1, 2)

    def test_inverting_units_changes_nothing(self, z6_table):
        localization = localize(z6_table, MultSet.units(z6_table))
        assert localization.canonical.is_bijective()

    def test_inverting_zero_gives_zero_ring(self, z6_table):
        localization = localize(z6_table, MultSet.generated(z6_table, [0]))
        assert localization.ring.is_zero_ring

    def test_localization_at_prime_of_z6(self, z6_table):
        localization = localize_at_prime(z6_table, principal_ideal(z6_table, 3))
        assert localization.ring.order == 3
        assert localization.canonical.is_ring_homomorphism()

    def test_localization_of_local_ring_at_its_maximal_ideal(self, z4):
        localization = localize_at_prime(z4, principal_ideal(z4, 2))
        assert localization.ring.order == 4

    @pytest.mark.parametrize("modulus", [6, 8, 12])
    def test_one_step_classes_match_the_scan(self, modulus):
        ring = cyclic(modulus)
        for mult_set in enumerate_mult_sets(ring):
            fast = localize(ring, mult_set)
            with patch("compactlab.rings.constructions._classes_through_one", return_value=None):
                scanned = localize(ring, mult_set)
            assert fast.fractions == scanned.fractions
            assert fast.canonical.image_array.tolist() == scanned.canonical.image_array.tolist()
            assert all(
                fast.fraction(r, s) == scanned.fraction(r, s)
                for r in range(ring.order)
                for s in mult_set.members
            )

    def test_radical_kernel_over_every_multiplicative_set(self):
        ring = cyclic(12)
        for mult_set in enumerate_mult_sets(ring):
            localization = localize(ring, mult_set)
            assert localization.radical_kernel() == brute_force_nilpotent_products(ring, mult_set)

    def test_one_step_classes_skip_oversized_rings(self, z6_table):
        with patch("compactlab.rings.constructions.PAIR_MATRIX_LIMIT", 4):
            localization = localize(z6_table, MultSet.generated(z6_table, [3]))
        assert localization.ring.order == 2


class TestRingMap:
    def test_identity_is_bijective_homomorphism(self, z6_table):
        identity = RingMap(z6_table, z6_table, tuple(range(6)))
        assert identity.is_bijective()
        assert identity.is_ring_homomorphism()

    def test_negation_is_not_a_homomorphism(self, z6_table):
        negation = RingMap(z6_table, z6_table, tuple((-a) % 6 for a in range(6)))
        assert not negation.is_ring_homomorphism()
