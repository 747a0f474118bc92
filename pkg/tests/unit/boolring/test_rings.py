"""Unit tests for Boolean rings of sets and finite subsets."""

import pytest

from compactlab.boolring.finsubset import (
    FinSubset,
    all_subsets,
    characteristic_isomorphism_holds,
    element_to_subset,
    power_set_ring,
    subset_to_element,
    union_and_downward_closed,
)
from compactlab.boolring.rings import BoolRing, RingKind, atom_decompose, same_ring
from compactlab.boolring.upset import UPSet
from compactlab.config import settings
from compactlab.errors import CapacityError

EVENS = UPSet.residue_class(2, 0)
ODDS = UPSet.residue_class(2, 1)
MULT3 = UPSet.residue_class(3, 0)


class TestAtomDecompose:
    def test_evens_and_multiples_of_three(self):
        decomposition = atom_decompose([EVENS, MULT3])
        assert decomposition.atoms == (
            UPSet.residue_class(6, 0),
            UPSet.build(0, (), 6, (1, 5)),
            UPSet.build(0, (), 6, (2, 4)),
            UPSet.residue_class(6, 3),
        )
        assert decomposition.infinite_flags == (True, True, True, True)
        decomposition.verify()

    def test_finite_generator_gives_finite_atom(self):
        decomposition = atom_decompose([UPSet.finite([1, 2, 3])])
        assert len(decomposition.atoms) == 2
        assert len(decomposition.infinite_atoms) == 1
        decomposition.verify()

    def test_atom_of(self):
        decomposition = atom_decompose([EVENS, MULT3])
        assert decomposition.atom_of(9) == 3
        assert decomposition.atom_of(7) == 1

    def test_no_generators_gives_single_atom(self):
        assert atom_decompose([]).atoms == (UPSet.universe(),)

    def test_too_many_generators(self):
        generators = [UPSet.residue_class(n + 2, 0) for n in range(settings.GENERATOR_CAP + 1)]
        with pytest.raises(CapacityError):
            atom_decompose(generators)


class TestBoolRing:
    def test_no_generators_is_fin_cofin(self):
        ring = BoolRing.generated([])
        assert ring.kind is RingKind.FIN_COFIN
        assert ring.contains(UPSet.finite([4]))
        assert ring.contains(UPSet.at_least(9))
        assert not ring.contains(EVENS)

    def test_generated_membership(self):
        ring = BoolRing.generated([EVENS])
        assert ring.contains(EVENS ^ UPSet.finite([1]))
        assert ring.contains(ODDS)
        assert not ring.contains(MULT3)

    def test_duplicate_generators_removed(self):
        ring = BoolRing.generated([EVENS, UPSet.build(0, (), 4, (0, 2))])
        assert ring.generators == (EVENS,)

    def test_same_ring_up_to_generators(self):
        assert same_ring(BoolRing.generated([EVENS]), BoolRing.generated([ODDS]))
        assert not same_ring(BoolRing.generated([EVENS]), BoolRing.generated([MULT3]))

    def test_full_finite_membership(self):
        ring = BoolRing.full_finite(3)
        assert ring.contains(FinSubset(3, 0b101))
        assert not ring.contains(FinSubset(2, 0b01))
        assert ring.contains(UPSet.finite([2]))
        assert not ring.contains(UPSet.finite([5]))

    def test_full_finite_has_no_atoms(self):
        with pytest.raises(TypeError):
            _ = BoolRing.full_finite(2).decomposition

    def test_describe(self):
        assert BoolRing.fin_cofin().describe() == "Fin/Cofin(N)"
        assert BoolRing.full_finite(3).describe() == "P({0..2})"


class TestFinSubset:
    def test_ring_operations(self):
        a, b = FinSubset.of(3, [0, 1]), FinSubset.of(3, [1, 2])
        assert (a + b).members == (0, 2)
        assert (a * b).members == (1,)
        assert (a | b) == FinSubset.full(3)
        assert (~a).members == (2,)

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            FinSubset(2, 1) + FinSubset(3, 1)

    def test_bits_outside_universe(self):
        with pytest.raises(ValueError):
            FinSubset(2, 0b100)

    def test_characteristic_functions(self):
        ring = power_set_ring(3)
        subset = FinSubset.of(3, [0, 2])
        a = subset_to_element(ring, subset)
        assert ring.components(a) == (1, 0, 1)
        assert element_to_subset(ring, a) == subset

    def test_power_set_ring_order(self):
        assert power_set_ring(3).order == 8
        with pytest.raises(ValueError):
            power_set_ring(0)

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_characteristic_isomorphism(self, size):
        assert characteristic_isomorphism_holds(size)

    def test_ideals_are_union_and_downward_closed(self):
        ideal = [FinSubset(2, 0b00), FinSubset(2, 0b01)]
        assert union_and_downward_closed(ideal)
        assert not union_and_downward_closed([FinSubset(2, 0b11)])
        assert len(all_subsets(2)) == 4
