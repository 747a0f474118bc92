"""Unit tests for the command line."""

import json
from unittest.mock import patch

import pytest

from compactlab.cli.main import (
    EXIT_CAPACITY,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    main,
    overridden,
    parse_element,
)
from compactlab.config import settings
from compactlab.errors import ParseError

Z6 = {"product": [{"p": 2}, {"p": 3}], "labels": ["a", "b"]}
Z4_Z9 = {"product": [{"p": 2, "k": 2}, {"p": 3, "k": 2}], "labels": ["a", "b"]}
SIERPINSKI = {"points": 2, "opens": [[], [1], [0, 1]]}


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestParseElement:
    def test_component_list(self, z6):
        assert parse_element(z6, "[1, 2]") == z6.encode([1, 2])

    def test_index(self, z6_table):
        assert parse_element(z6_table, "3") == 3

    def test_out_of_range(self, z6_table):
        with pytest.raises(ParseError):
            parse_element(z6_table, "6")

    def test_garbage(self, z6):
        with pytest.raises(ParseError) as excinfo:
            parse_element(z6, "one")
        assert excinfo.value.field == "mult"


class TestOverridden:
    def test_restores_settings(self):
        before = settings.PRODUCT_RING_CAP
        with overridden(PRODUCT_RING_CAP=10, SPACE_POINT_CAP=None):
            assert settings.PRODUCT_RING_CAP == 10
        assert settings.PRODUCT_RING_CAP == before


class TestRingVerbs:
    def test_ring_spec(self, capsys, ring_file):
        code, out = run(capsys, "ring-spec", "--file", str(ring_file(Z6)))
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["site"] == "spec"
        assert len(payload["points"]) == 2

    def test_ring_topology(self, capsys, ring_file):
        code, out = run(capsys, "ring-topology", "--file", str(ring_file(Z4_Z9)), "--site", "min")
        assert code == EXIT_OK
        assert json.loads(out)["zariski_vs_flat"] == "equal"

    def test_ring_localize(self, capsys, ring_file):
        code, out = run(
            capsys, "ring-localize", "--file", str(ring_file(Z6)), "--mult", "[1, 0]"
        )
        assert code == EXIT_OK
        assert json.loads(out)["order"] == 2

    def test_ring_localize_bad_element(self, capsys, ring_file):
        code, _ = run(capsys, "ring-localize", "--file", str(ring_file(Z6)), "--mult", "x")
        assert code == EXIT_USAGE

    def test_ultra_flat(self, capsys, ring_file):
        code, out = run(
            capsys, "ultra", "--ring", str(ring_file(Z4_Z9)), "--at", "b", "--kind", "flat"
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["quotient"]["order"] == 3
        assert payload["classification"]["field"] is True

    def test_ultra_unknown_label(self, capsys, ring_file):
        code, _ = run(capsys, "ultra", "--ring", str(ring_file(Z6)), "--at", "z")
        assert code == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path):
        code, _ = run(capsys, "ring-spec", "--file", str(tmp_path / "absent.json"))
        assert code == EXIT_USAGE

    def test_max_ring_caps_arithmetic(self, capsys, ring_file):
        code, _ = run(capsys, "ring-spec", "--file", str(ring_file(Z4_Z9)), "--max-ring", "10")
        assert code == EXIT_CAPACITY


class TestStoneVerbs:
    def test_stone_spec(self, capsys):
        code, out = run(capsys, "stone-spec", "--size", "2")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["universe"] == 2
        assert payload["discrete"] is True

    def test_stone_spec_over_cap(self, capsys):
        code, _ = run(capsys, "stone-spec", "--size", "6")
        assert code == EXIT_CAPACITY

    def test_compactify(self, capsys):
        code, out = run(capsys, "compactify", "--gen", "evens", "--gen", "{n mod 3 = 0}")
        assert code == EXIT_OK
        assert len(json.loads(out)["compactification"]["infinity"]) == 4

    def test_alexandroff_probes(self, capsys):
        code, out = run(capsys, "alexandroff", "--probe", "{n>=3}", "--probe", "evens")
        probes = json.loads(out)["probes"]
        assert code == EXIT_OK
        assert probes[0]["infinity"] == ["inf[N]"]
        assert probes[0]["first_natural"] == 3
        assert probes[1] == {"probe": "{n mod 2 in {0}}", "in_ring": False}

    def test_alexandroff_dot(self, capsys):
        code, out = run(capsys, "alexandroff", "--points", "2", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith("graph ")
        assert '"0" -- "inf0";' in out

    def test_bad_probe(self, capsys):
        code, _ = run(capsys, "alexandroff", "--probe", "primes")
        assert code == EXIT_USAGE


class TestSpaceVerbs:
    def test_space_beta(self, capsys, space_file):
        code, out = run(capsys, "space-beta", "--file", str(space_file(SIERPINSKI)))
        assert code == EXIT_OK
        assert json.loads(out)["partition"] == [[0, 1]]

    def test_space_beta_dot(self, capsys, space_file):
        path = str(space_file(SIERPINSKI))
        code, out = run(capsys, "space-beta", "--file", path, "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith('digraph "specialization" {')
        assert '"0" -> "1";' in out

    def test_space_check(self, capsys, space_file):
        code, out = run(capsys, "space-check", "--file", str(space_file(SIERPINSKI)))
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["pi0_spec"] is True
        assert payload["open_via_convergence"] == [[], [1], [0, 1]]

    def test_malformed_space(self, capsys, space_file):
        code, _ = run(capsys, "space-check", "--file", str(space_file({"points": 2})))
        assert code == EXIT_USAGE


class TestVerify:
    def test_single_suite_table(self, capsys):
        code, out = run(capsys, "verify", "--suite", "periodic-sets", "--format", "table")
        assert code == EXIT_OK
        assert "periodic-sets" in out
        assert "PASS" in out

    def test_failing_suite_exit_code(self, capsys):
        def broken(ctx, result):
            result.add("always fails", "nothing", False, {"counterexample": 0})

        with patch.dict("compactlab.cli.suites.SUITES", {"periodic-sets": broken}):
            code, out = run(capsys, "verify", "--suite", "periodic-sets")
        assert code == EXIT_CHECK_FAILED
        assert json.loads(out)["passed"] is False

    def test_verify_has_no_graph(self, capsys):
        code, _ = run(capsys, "verify", "--suite", "periodic-sets", "--format", "dot")
        assert code == EXIT_USAGE


class TestArguments:
    def test_unknown_verb(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["explode"])
        assert excinfo.value.code == 2

    def test_abbreviated_flag_rejected(self):
        with pytest.raises(SystemExit):
            main(["stone-spec", "--si", "2"])

    def test_non_positive_size(self):
        with pytest.raises(SystemExit):
            main(["stone-spec", "--size", "0"])

    def test_invalid_configuration(self, capsys):
        with patch("compactlab.config.settings.PRODUCT_RING_CAP", 0):
            code, _ = run(capsys, "stone-spec", "--size", "2")
        assert code == EXIT_USAGE
