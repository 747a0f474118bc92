"""
Integration Tests for the Verification Suites

Runs every suite over the default corpus bounds, and checks that the report is identical
between runs and between parallel and sequential execution.
"""

import json

import pytest

from compactlab.cli.main import main
from compactlab.cli.suites import SUITES, SuiteContext, run_suites


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_suite_passes(suite_id):
    report = run_suites([suite_id], SuiteContext.from_settings(), parallel=False)
    failures = [record.to_dict() for suite in report.suites for record in suite.failures]
    assert report.passed, failures


@pytest.mark.integration
@pytest.mark.slow
def test_parallel_matches_sequential():
    ids = ["boolean-spectrum", "ring-map-counts", "ultra-rings", "alexandroff"]
    ctx = SuiteContext(max_ring=24, max_space=3, seed=7)
    parallel = run_suites(ids, ctx, parallel=True).to_dict()
    sequential = run_suites(ids, ctx, parallel=False).to_dict()
    assert parallel == sequential


@pytest.mark.integration
@pytest.mark.slow
def test_verify_output_is_reproducible(capsys):
    argv = ["verify", "--suite", "totally-disconnected", "--seed", "3"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["passed"] is True
