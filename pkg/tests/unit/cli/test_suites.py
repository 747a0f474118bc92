"""Unit tests for suites module."""

from unittest.mock import patch

import pytest

from compactlab.cli.report import SuiteResult
from compactlab.cli.suites import (
    LOCALIZATION_CHECKS,
    SUITES,
    SuiteContext,
    _check_ultra_point,
    localization_kernel,
    resolve_suites,
    run_suite,
    run_suites,
)
from compactlab.config.settings import SUITE_CONFIG
from compactlab.errors import ConsistencyError
from compactlab.rings.atoms import LocalAtom
from compactlab.rings.product import product


@pytest.fixture
def small_ctx() -> SuiteContext:
    return SuiteContext(max_ring=8, max_space=2, seed=0)


class TestRegistry:
    def test_every_configured_suite_is_registered(self):
        assert set(SUITES) == set(SUITE_CONFIG)

    def test_resolve_all_is_sorted(self):
        resolved = resolve_suites("all")
        assert resolved == sorted(SUITE_CONFIG)
        assert len(resolved) == 14

    def test_resolve_single(self):
        assert resolve_suites("alexandroff") == ["alexandroff"]

    def test_resolve_unknown(self):
        with pytest.raises(ValueError):
            resolve_suites("no-such-suite")


class TestSuiteContext:
    def test_corpus_respects_bound(self, small_ctx):
        assert all(entry.ring.order <= 8 for entry in small_ctx.corpus())
        assert all(entry.ring.order <= 4 for entry in small_ctx.corpus(max_order=4))

    def test_from_settings(self):
        with patch("compactlab.config.settings.ENUMERATION_RING_CAP", 12):
            assert SuiteContext.from_settings(augment=2).max_ring == 12


class TestRunSuites:
    def test_small_suites_pass(self, small_ctx):
        report = run_suites(["periodic-sets", "ring-axioms"], small_ctx)
        assert report.passed
        assert [suite.suite_id for suite in report.suites] == ["periodic-sets", "ring-axioms"]

    def test_parallel_and_sequential_reports_match(self, small_ctx):
        ids = ["ring-axioms", "minimal-primes"]
        parallel = run_suites(ids, small_ctx, parallel=True)
        sequential = run_suites(ids, small_ctx, parallel=False)
        assert parallel.to_dict() == sequential.to_dict()

    def test_timings_reported_on_request(self, small_ctx):
        report = run_suites(["ring-axioms"], small_ctx, timings=True)
        assert "seconds" in report.to_dict()["suites"][0]

    def test_unknown_suite_rejected(self, small_ctx):
        with pytest.raises(ValueError):
            run_suites(["no-such-suite"], small_ctx)

    def test_consistency_error_becomes_failing_record(self, small_ctx):
        def broken(ctx, result):
            raise ConsistencyError("oracles disagree")

        with patch.dict(SUITES, {"ring-axioms": broken}):
            result = run_suite("ring-axioms", small_ctx)
        assert not result.passed
        assert result.records[-1].check == "suite completed"

    def test_same_seed_same_report(self, small_ctx):
        first = run_suites(["periodic-sets"], small_ctx).to_dict()
        second = run_suites(["periodic-sets"], small_ctx).to_dict()
        assert first == second


class TestUltraPoints:
    @pytest.fixture
    def z4_times_z2(self):
        return product([LocalAtom(2, 2), LocalAtom(2)], ["a", "b"])

    def _checks(self, ring, x: int) -> tuple[SuiteResult, dict[str, bool]]:
        result = SuiteResult("ultra-rings")
        _check_ultra_point(result, ring, "Z/4 x Z/2", x)
        return result, {record.check: record.passed for record in result.records}

    def test_local_non_field_factor(self, z4_times_z2):
        result, checks = self._checks(z4_times_z2, 0)
        assert result.passed
        assert checks["R/M* is local"]
        assert checks["M* inside M-flat"]
        assert "M* is a minimal prime" not in checks

    def test_field_factor_gives_minimal_prime(self, z4_times_z2):
        result, checks = self._checks(z4_times_z2, 1)
        assert result.passed
        assert checks["M* is a minimal prime"]
        assert "R/M* is local" not in checks

    @pytest.mark.slow
    def test_suite_passes_with_non_field_factors(self):
        report = run_suites(["ultra-rings"], SuiteContext(max_ring=16, max_space=2, seed=0))
        assert report.passed


class TestLocalizationKernel:
    def test_one_record_per_check_and_ring(self, small_ctx):
        result = SuiteResult("localization-kernel")
        localization_kernel(small_ctx, result)
        assert result.passed
        assert {record.check for record in result.records} == set(LOCALIZATION_CHECKS)
        assert all(record.witness["instances"] >= 1 for record in result.records)

    def test_first_failure_kept_as_counterexample(self, small_ctx):
        with patch("compactlab.cli.suites._localization_outcomes", return_value=(False, True)):
            result = SuiteResult("localization-kernel")
            localization_kernel(small_ctx, result)
        failures = result.failures
        assert failures
        assert {record.check for record in failures} == {LOCALIZATION_CHECKS[0]}
        assert all("counterexample" in record.witness for record in failures)

    def test_consistency_error_fails_both_checks(self, small_ctx):
        with patch(
            "compactlab.cli.suites._localization_outcomes",
            side_effect=ConsistencyError("fractions disagree"),
        ):
            result = SuiteResult("localization-kernel")
            localization_kernel(small_ctx, result)
        assert {record.check for record in result.failures} == set(LOCALIZATION_CHECKS)
        assert result.failures[0].witness["consistency"] == "fractions disagree"
