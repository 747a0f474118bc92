"""Unit tests for space and corpus modules."""

import pytest

from compactlab.errors import CapacityError, ParseError
from compactlab.topspace.corpus import enumerate_spaces
from compactlab.topspace.space import FiniteSpace, load_space, parse_space


class TestFiniteSpace:
    def test_sierpinski_preorder(self, sierpinski):
        assert sierpinski.preorder() == frozenset({(0, 0), (0, 1), (1, 1)})

    def test_closure_of_points(self, sierpinski):
        assert sierpinski.closure_of_point(1) == 0b11
        assert sierpinski.closure_of_point(0) == 0b01

    def test_from_preorder_components(self):
        space = FiniteSpace.from_preorder(3, [(0, 1)])
        assert space.components() == [(0, 1), (2,)]

    def test_from_preorder_takes_transitive_closure(self):
        space = FiniteSpace.from_preorder(3, [(0, 1), (1, 2)])
        assert (0, 2) in space.preorder()

    def test_disjoint_union(self, sierpinski):
        union = sierpinski.disjoint_union(FiniteSpace.discrete(1))
        assert union.size == 3
        assert union.components() == [(0, 1), (2,)]

    def test_describe(self, sierpinski):
        assert sierpinski.describe() == {"points": 2, "opens": [[], [1], [0, 1]]}


class TestParseSpace:
    def test_parses_opens(self):
        space = parse_space('{"points": 2, "opens": [[], [1], [0, 1]]}')
        assert space == FiniteSpace.sierpinski()

    def test_parses_preorder_with_inferred_size(self):
        assert parse_space('{"preorder": [[0, 1]]}') == FiniteSpace.sierpinski()

    def test_opens_that_are_not_a_topology(self):
        with pytest.raises(ParseError) as excinfo:
            parse_space('{"points": 2, "opens": [[0]]}')
        assert excinfo.value.field == "opens"

    def test_point_out_of_range(self):
        with pytest.raises(ParseError) as excinfo:
            parse_space('{"points": 2, "opens": [[], [5], [0, 1]]}')
        assert excinfo.value.field == "opens[1]"

    def test_point_count_too_small_for_preorder(self):
        with pytest.raises(ParseError):
            parse_space('{"points": 1, "preorder": [[0, 1]]}')

    def test_invalid_json_reports_line(self):
        with pytest.raises(ParseError) as excinfo:
            parse_space('{\n  "points": 2,\n  oops\n}')
        assert excinfo.value.line == 3

    def test_missing_keys(self):
        with pytest.raises(ParseError):
            parse_space('{"points": 2}')

    def test_load_from_file(self, space_file):
        path = space_file({"preorder": [[0, 1]], "points": 3})
        assert load_space(path).size == 3

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_space(tmp_path / "absent.json")


class TestEnumerateSpaces:
    @pytest.mark.parametrize(("size", "count"), [(1, 1), (2, 4), (3, 29), (4, 355)])
    def test_labeled_topology_counts(self, size, count):
        assert len(enumerate_spaces(size)) == count

    def test_over_cap_raises(self):
        with pytest.raises(CapacityError):
            enumerate_spaces(3, cap=2)

    def test_order_is_deterministic(self):
        first = [space.describe() for space in enumerate_spaces(3)]
        second = [space.describe() for space in enumerate_spaces(3)]
        assert first == second
