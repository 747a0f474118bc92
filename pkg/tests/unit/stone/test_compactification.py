"""Unit tests for compactification module."""

from unittest.mock import patch

import pytest

from compactlab.boolring.rings import BoolRing, same_ring
from compactlab.boolring.upset import UPSet
from compactlab.errors import CapacityError
from compactlab.stone.compactification import (
    alexandroff,
    check_cover,
    clop_of_compactification,
    compactify,
    maximality_witness,
)
from compactlab.stone.points import ExplicitMaxIdeal, InfinityPoint, PrincipalPoint, ideal_law_violations
from compactlab.topspace.space import FiniteSpace

EVENS = UPSet.residue_class(2, 0)
MULT3 = UPSet.residue_class(3, 0)


class TestAlexandroff:
    def test_single_point_at_infinity(self):
        alpha = alexandroff()
        assert alpha.infinity == (InfinityPoint(UPSet.universe()),)

    def test_membership(self):
        alpha = alexandroff()
        assert alpha.contains(alpha.infinity[0], UPSet.finite([0, 7]))
        assert not alpha.contains(alpha.infinity[0], UPSet.at_least(3))
        assert alpha.contains(PrincipalPoint(1), UPSet.at_least(3))

    def test_basic_open_of_tail(self):
        open_set = alexandroff().basic_open(UPSet.at_least(3))
        assert open_set.infinity == frozenset({0})
        assert open_set.naturals == UPSet.at_least(3)

    def test_non_member_rejected(self):
        with pytest.raises(ValueError):
            alexandroff().basic_open(EVENS)

    def test_hausdorff_on_sample(self):
        alpha = alexandroff()
        assert alpha.is_hausdorff_on(alpha.sample_points(5))

    def test_separating_set_needs_distinct_points(self):
        alpha = alexandroff()
        with pytest.raises(ValueError):
            alpha.separating_set(PrincipalPoint(2), PrincipalPoint(2))

    def test_eta_rejects_negative(self):
        with pytest.raises(ValueError):
            alexandroff().eta(-1)


class TestCompactify:
    def test_evens_and_multiples_of_three_add_four_points(self):
        space = compactify([EVENS, MULT3])
        assert len(space.infinity) == 4
        assert space.basic_open(EVENS).infinity == frozenset({0, 2})

    def test_separation_of_points_at_infinity(self):
        space = compactify([EVENS, MULT3])
        assert space.is_hausdorff_on(space.sample_points(6))
        first, second = space.infinity[0], space.infinity[1]
        separator = space.separating_set(first, second)
        assert first.in_basic_open(separator)
        assert second.in_basic_open(~separator)

    def test_basic_opens_are_clopen(self):
        space = compactify([EVENS, MULT3])
        assert space.basic_open_is_clopen(EVENS, space.sample_points(6))

    def test_dense_witness(self):
        space = compactify([EVENS])
        assert space.dense_witness(UPSet.finite([5])) == 5
        assert space.dense_witness(EVENS ^ UPSet.finite([0])) == 2
        assert space.dense_witness(UPSet.empty()) is None

    def test_describe_lists_atoms(self):
        assert len(compactify([EVENS]).describe()["atoms"]) == 2


class TestMaximality:
    def test_witness_for_principal_point(self):
        witness = maximality_witness(BoolRing.fin_cofin(), PrincipalPoint(2), UPSet.finite([2]))
        assert witness.holds()

    def test_witness_for_point_at_infinity(self):
        point = InfinityPoint(UPSet.universe())
        assert maximality_witness(BoolRing.fin_cofin(), point, UPSet.at_least(5)).holds()

    def test_element_already_in_ideal(self):
        with pytest.raises(ValueError):
            maximality_witness(BoolRing.fin_cofin(), PrincipalPoint(2), UPSet.finite([3]))

    def test_explicit_ideals_rejected(self):
        with pytest.raises(ValueError):
            maximality_witness(
                BoolRing.fin_cofin(), ExplicitMaxIdeal(1, frozenset({0})), UPSet.finite([0])
            )

    def test_ideal_laws_on_sample(self):
        samples = [UPSet.finite([0]), UPSet.finite([1, 4]), UPSet.at_least(2), UPSet.cofinite([3])]
        assert ideal_law_violations(PrincipalPoint(0), samples) == []
        assert ideal_law_violations(InfinityPoint(UPSet.universe()), samples) == []


class TestCovers:
    def test_thinning_to_a_finite_subcover(self):
        opens = [UPSet.finite([0]), UPSet.finite([1]), UPSet.at_least(1)]
        result = check_cover(alexandroff(), opens)
        assert result.covers
        assert result.subcover == (UPSet.finite([0]), UPSet.at_least(1))

    def test_missing_natural_reported(self):
        result = check_cover(alexandroff(), [UPSet.finite([0]), UPSet.at_least(2)])
        assert not result.covers
        assert result.uncovered == PrincipalPoint(1)

    def test_cover_of_two_point_compactification(self):
        result = check_cover(compactify([EVENS]), [EVENS, ~EVENS, UPSet.finite([0])])
        assert result.covers
        assert result.subcover == (EVENS, ~EVENS)


class TestClopRing:
    def test_recovers_generated_ring(self):
        space = compactify([EVENS, MULT3])
        assert same_ring(clop_of_compactification(space), space.ring)

    def test_one_point_compactification_gives_fin_cofin(self):
        assert clop_of_compactification(alexandroff()) == BoolRing.fin_cofin()

    def test_finite_space_gives_power_set_of_components(self, sierpinski):
        assert clop_of_compactification(sierpinski) == BoolRing.full_finite(1)
        assert clop_of_compactification(FiniteSpace.discrete(3)) == BoolRing.full_finite(3)


class TestClopenSets:
    @pytest.fixture
    def evens_split(self):
        """Atoms {0, 2} (finite), the evens from 4 on, and the odds."""
        return compactify([EVENS, UPSet.finite([0, 2])])

    def test_two_points_at_infinity(self, evens_split):
        atoms = {point.atom for point in evens_split.infinity}
        assert atoms == {EVENS - UPSet.finite([0, 2]), ~EVENS}

    def test_unions_of_infinite_atoms(self, evens_split):
        clopens = evens_split.clopen_sets()
        assert len(clopens) == 4
        assert {clopen.infinity for clopen in clopens} == {
            frozenset(),
            frozenset({0}),
            frozenset({1}),
            frozenset({0, 1}),
        }

    def test_pulled_back_ring_matches(self, evens_split):
        assert same_ring(clop_of_compactification(evens_split), evens_split.ring)

    def test_finite_atom_alone_is_not_a_point(self, evens_split):
        clopens = evens_split.clopen_sets()
        assert all(clopen.infinity or clopen.naturals.is_empty for clopen in clopens)

    def test_neighbourhood_must_cover_the_atom_up_to_finite(self, evens_split):
        evens_index = next(
            i for i, point in enumerate(evens_split.infinity) if (point.atom - EVENS).is_empty
        )
        assert not evens_split.is_open_set(UPSet.residue_class(4, 0), frozenset({evens_index}))
        assert evens_split.is_open_set(EVENS, frozenset({evens_index}))

    def test_listed_point_needs_its_whole_atom(self, evens_split):
        assert not evens_split.is_open_set(EVENS, frozenset({0, 1}))
        assert evens_split.is_open_set(UPSet.universe(), frozenset({0, 1}))

    def test_too_many_points_at_infinity(self, evens_split):
        with patch("compactlab.config.settings.CLOPEN_ATOM_CAP", 1):
            with pytest.raises(CapacityError):
                evens_split.clopen_sets()
