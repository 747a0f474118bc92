"""
CLI Package

The compactlab command, its verification suites, report records and output formats.
"""

from compactlab.cli.emit import FORMATS, emit, render_dot, render_report_table, render_table
from compactlab.cli.main import build_parser, main
from compactlab.cli.report import CheckRecord, Report, SuiteResult
from compactlab.cli.suites import SUITES, SuiteContext, resolve_suites, run_suite, run_suites

__all__ = [
    "main",
    "build_parser",
    "FORMATS",
    "emit",
    "render_dot",
    "render_table",
    "render_report_table",
    "CheckRecord",
    "SuiteResult",
    "Report",
    "SUITES",
    "SuiteContext",
    "resolve_suites",
    "run_suite",
    "run_suites",
]
