"""Unit tests for emit and report modules."""

import json
from unittest.mock import patch

import pytest

from compactlab.boolring.upset import UPSet
from compactlab.cli.emit import (
    TABLE_NESTING_DEPTH,
    emit,
    render_dot,
    render_report_table,
    render_table,
)
from compactlab.cli.report import Report, SuiteResult, reproducer_for
from compactlab.errors import ConsistencyError
from compactlab.rings.table import cyclic


@pytest.fixture
def failing_report() -> Report:
    passing = SuiteResult("alexandroff")
    passing.add("covers thin", "20 covers", True, {"instances": 20})
    failing = SuiteResult("ring-axioms")
    failing.add("ring laws", "Z/6 (table)", False, {"counterexample": [1, 2]}, cyclic(2))
    return Report([passing, failing])


class TestEmit:
    def test_json_sorts_keys(self):
        text = emit("json", {"b": 1, "a": 2})
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": 2, "b": 1}

    def test_dot_needs_a_graph(self):
        with pytest.raises(ValueError):
            emit("dot", {"order": 2})

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit("xml", {})

    def test_table_dispatches_on_reports(self, failing_report):
        assert emit("table", failing_report.to_dict()).startswith("SUITE")


class TestRenderDot:
    def test_directed_graph(self):
        graph = {
            "name": "specialization",
            "directed": True,
            "nodes": [{"id": "1", "label": "1"}, {"id": "0", "label": "0"}],
            "edges": [["0", "1"]],
        }
        assert render_dot(graph).splitlines() == [
            'digraph "specialization" {',
            '  "0" [label="0"];',
            '  "1" [label="1"];',
            '  "0" -> "1";',
            "}",
        ]

    def test_infinity_points_are_marked(self):
        graph = {
            "name": "Fin/Cofin(N)",
            "directed": False,
            "nodes": [{"id": "inf0", "label": "inf[N]", "infinity": True}],
            "edges": [],
        }
        text = render_dot(graph)
        assert text.startswith("graph ")
        assert "shape=doublecircle" in text

    def test_quotes_are_escaped(self):
        graph = {"name": 'a"b', "nodes": [], "edges": []}
        assert render_dot(graph).startswith('digraph "a\\"b" {')


class TestRenderTable:
    def test_nesting_past_the_depth_is_collapsed_to_json(self):
        assert TABLE_NESTING_DEPTH == 2
        text = render_table({"a": {"b": {"c": {"d": 1}}}})
        assert text == 'a.b.c  {"d":1}'

    def test_deeper_cutoff_spreads_more_levels(self):
        with patch("compactlab.cli.emit.TABLE_NESTING_DEPTH", 3):
            assert render_table({"a": {"b": {"c": {"d": 1}}}}) == "a.b.c.d  1"

    def test_flattens_nested_keys(self):
        text = render_table({"ring": {"order": 6}, "points": [1, 2], "graph": {"nodes": []}})
        lines = text.splitlines()
        assert lines == ["points      [1,2]", "ring.order  6"]

    def test_report_table_lists_failures(self, failing_report):
        text = render_report_table(failing_report.to_dict())
        assert "FAIL" in text
        assert "ring laws" in text
        assert text.splitlines()[-1] == "2 suites, 2 checks, 1 failed"


class TestReport:
    def test_failing_records_carry_reproducer(self, failing_report):
        record = failing_report.suites[1].records[0]
        assert json.loads(record.reproducer)["table"]["n"] == 2
        assert failing_report.suites[0].records[0].reproducer is None

    def test_summary(self, failing_report):
        assert not failing_report.passed
        assert failing_report.summary() == {"suites": 2, "checks": 2, "failures": 1}

    def test_guarded_turns_consistency_errors_into_records(self):
        result = SuiteResult("periodic-sets")
        with result.guarded("oracle", "evens"):
            raise ConsistencyError("membership differs at 4")
        assert not result.passed
        assert result.records[0].witness == {"consistency": "membership differs at 4"}

    def test_timings_only_when_requested(self):
        result = SuiteResult("alexandroff", seconds=1.23456)
        assert "seconds" not in result.to_dict()
        assert result.to_dict(timings=True)["seconds"] == 1.235

    def test_reproducer_for_sets(self):
        assert reproducer_for(UPSet.finite([1])) == '{"finite": [1]}'
        assert reproducer_for([UPSet.finite([1])]) == '[{"finite": [1]}]'
        assert reproducer_for(None) is None
