"""Unit tests for upset module."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from compactlab.boolring.upset import (
    UPSet,
    agrees_with_oracle,
    canonicalize,
    parse_upset,
    upset_from_dict,
)
from compactlab.errors import ParseError


@st.composite
def upsets(draw) -> UPSet:
    threshold = draw(st.integers(min_value=0, max_value=8))
    period = draw(st.integers(min_value=1, max_value=6))
    head = draw(st.frozensets(st.integers(min_value=0, max_value=max(threshold - 1, 0))))
    residues = draw(st.frozensets(st.integers(min_value=0, max_value=period - 1)))
    return UPSet(threshold, frozenset(h for h in head if h < threshold), period, residues)


class TestUPSet:
    def test_canonical_equality_across_presentations(self):
        assert UPSet.build(0, (), 4, (0, 2)) == UPSet.residue_class(2, 0)
        assert UPSet.build(3, (0, 1, 2), 1, (0,)) == UPSet.universe()
        assert hash(UPSet.build(0, (), 4, (0, 2))) == hash(UPSet.residue_class(2, 0))

    def test_membership(self):
        evens = UPSet.residue_class(2, 0)
        assert 4 in evens
        assert 3 not in evens
        assert -2 not in evens

    def test_finite_and_cofinite(self):
        assert UPSet.finite([1, 2]).is_finite
        assert UPSet.cofinite([0]).is_cofinite
        assert not UPSet.residue_class(3, 1).is_finite
        assert not UPSet.residue_class(3, 1).is_cofinite

    def test_evens_and_odds_cover_n(self):
        assert (UPSet.residue_class(2, 0) | UPSet.residue_class(2, 1)).is_universe

    def test_ring_notation(self):
        evens, mult3 = UPSet.residue_class(2, 0), UPSet.residue_class(3, 0)
        assert evens * mult3 == UPSet.residue_class(6, 0)
        assert evens + evens == UPSet.empty()

    def test_first_member(self):
        assert UPSet.residue_class(3, 2).first() == 2
        assert UPSet.build(5, (), 3, (0,)).first() == 6
        assert UPSet.empty().first() is None

    def test_finite_members(self):
        assert UPSet.finite([5, 1]).finite_members() == (1, 5)
        with pytest.raises(ValueError):
            UPSet.at_least(2).finite_members()

    def test_subset(self):
        assert UPSet.residue_class(4, 0).issubset(UPSet.residue_class(2, 0))
        assert not UPSet.residue_class(2, 0).issubset(UPSet.residue_class(4, 0))

    def test_malformed_fields_rejected(self):
        with pytest.raises(ValueError):
            UPSet(2, frozenset({3}), 1, frozenset())
        with pytest.raises(ValueError):
            UPSet(0, frozenset(), 0, frozenset())
        with pytest.raises(ValueError):
            UPSet(0, frozenset(), 2, frozenset({2}))

    def test_text_forms(self):
        assert str(UPSet.finite([0, 1])) == "{0,1}"
        assert str(UPSet.universe()) == "N"
        assert str(UPSet.cofinite([0, 2])) == "N\\{0,2}"
        assert str(UPSet.residue_class(3, 1)) == "{n mod 3 in {1}}"

    def test_to_dict(self):
        assert UPSet.finite([3]).to_dict() == {"finite": [3]}
        assert UPSet.at_least(2).to_dict() == {"cofinite": [0, 1]}
        assert UPSet.residue_class(2, 1).to_dict() == {
            "head": [],
            "threshold": 0,
            "period": 2,
            "residues": [1],
        }


class TestUPSetAlgebra:
    @given(upsets(), upsets())
    def test_union_matches_membership_oracle(self, a, b):
        assert agrees_with_oracle(a | b, [a, b], np.logical_or)

    @given(upsets(), upsets())
    def test_symmetric_difference_matches_membership_oracle(self, a, b):
        assert agrees_with_oracle(a ^ b, [a, b], np.logical_xor)

    @given(upsets(), upsets())
    def test_difference_matches_membership_oracle(self, a, b):
        assert agrees_with_oracle(a - b, [a, b], lambda x, y: x & ~y)

    @given(upsets())
    def test_complement_matches_membership_oracle(self, a):
        assert agrees_with_oracle(~a, [a], np.logical_not)

    @given(upsets(), upsets())
    def test_de_morgan(self, a, b):
        assert ~(a | b) == ~a & ~b

    @given(upsets())
    def test_canonicalize_is_idempotent(self, a):
        once = canonicalize(a)
        assert once.is_canonical
        assert canonicalize(once) is once
        assert once == a

    @given(upsets())
    def test_finite_or_infinite_complement(self, a):
        assert a.is_cofinite == (~a).is_finite


class TestParseUPSet:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("{n>=3}", UPSet.at_least(3)),
            ("{n mod 3 = 1}", UPSet.residue_class(3, 1)),
            ("{0,2,5}", UPSet.finite([0, 2, 5])),
            ("{}", UPSet.empty()),
            ("evens", UPSet.residue_class(2, 0)),
            ("~evens", UPSet.residue_class(2, 1)),
            ("all", UPSet.universe()),
            ('{"finite": [1]}', UPSet.finite([1])),
            ('{"cofinite": [0]}', UPSet.at_least(1)),
            ('{"threshold": 2, "head": [0], "period": 2, "residues": [1]}',
             UPSet.build(2, (0,), 2, (1,))),
        ],
    )
    def test_accepted_forms(self, text, expected):
        assert parse_upset(text) == expected

    def test_unrecognized_text(self):
        with pytest.raises(ParseError):
            parse_upset("primes")

    def test_zero_modulus(self):
        with pytest.raises(ParseError):
            parse_upset("{n mod 0 = 0}")

    def test_bad_dict_fields(self):
        with pytest.raises(ParseError) as excinfo:
            upset_from_dict({"period": 2, "residues": [-1]})
        assert excinfo.value.field == "residues"
        with pytest.raises(ParseError):
            upset_from_dict({"period": "two"})
        with pytest.raises(ParseError):
            upset_from_dict([1, 2])
