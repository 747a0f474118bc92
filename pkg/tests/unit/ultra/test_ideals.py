"""Unit tests for supports, ultra ideals and their quotients."""

import pytest

from compactlab.boolring.finsubset import FinSubset
from compactlab.ultra.ideals import (
    PrincipalMax,
    UltraKind,
    ideal_flat,
    ideal_star,
    principal_maximals,
    residue_field_comparison,
    ultraproduct,
)
from compactlab.ultra.support import support, support_bits


class TestSupport:
    def test_support_and_unit_locus(self, z4_z4):
        profile = support(z4_z4, z4_z4.encode([2, 1]))
        assert profile.support == FinSubset(2, 0b11)
        assert profile.unit_locus == FinSubset(2, 0b10)

    def test_unit_locus_inside_support(self, z4_z9):
        su, omega = support_bits(z4_z9)
        assert ((omega & ~su) == 0).all()

    def test_bits_agree_with_profiles(self, z4_z9):
        su, omega = support_bits(z4_z9)
        for f in range(z4_z9.order):
            profile = support(z4_z9, f)
            assert profile.support.bits == su[f]
            assert profile.unit_locus.bits == omega[f]

    def test_table_ring_rejected(self, z6_table):
        with pytest.raises(TypeError):
            support_bits(z6_table)


class TestUltraIdeals:
    def test_principal_max_members(self):
        assert PrincipalMax(2, 0).members() == frozenset({0b00, 0b10})
        assert len(principal_maximals(3)) == 3

    def test_point_outside_universe(self):
        with pytest.raises(ValueError):
            PrincipalMax(2, 2)

    def test_flat_ideal_of_z4_z9_at_b(self, z4_z9):
        ultra = ideal_flat(PrincipalMax(2, 1), z4_z9)
        assert ultra.kind is UltraKind.FLAT
        assert ultra.ideal.size == 12

    def test_star_ideal_of_z4_z9_at_b(self, z4_z9):
        ultra = ideal_star(PrincipalMax(2, 1), z4_z9)
        assert ultra.ideal.size == 4
        assert z4_z9.components(ultra.ideal.generators[0]) == (1, 0)

    def test_label_count_must_match(self, z4_z9):
        with pytest.raises(ValueError):
            ideal_star(PrincipalMax(3, 0), z4_z9)


class TestUltraproduct:
    def test_star_quotient_of_z6_is_a_field(self, z6):
        result = ultraproduct(PrincipalMax(2, 0), z6, UltraKind.STAR)
        assert result.ring.order == 2
        assert result.classify()["field"]

    def test_star_quotient_recovers_local_factor(self, z4_z9):
        result = ultraproduct(PrincipalMax(2, 1), z4_z9, "star")
        assert result.ring.order == 9
        assert result.classify() == {"field": False, "domain": False, "local": True}

    def test_flat_quotient_is_residue_field(self, z4_z9):
        result = ultraproduct(PrincipalMax(2, 0), z4_z9, "flat")
        assert result.ring.order == 2
        assert result.comparison.is_bijective()

    def test_table_ring_rejected(self, z6_table):
        with pytest.raises(TypeError):
            ultraproduct(PrincipalMax(2, 0), z6_table)

    def test_residue_field_comparison(self, z4_z9):
        comparison = residue_field_comparison(PrincipalMax(2, 1), z4_z9)
        assert comparison.is_bijective()
        assert comparison.target.order == 3
