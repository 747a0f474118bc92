"""
Verification Reports

A report is a list of suite results, each a list of check records. A record names the check,
the instance it ran on, whether it passed, and a witness: a count or small summary when it
passed, the counterexample when it failed. Failing records also carry the instance's
description inline so the failure can be reproduced from the report alone.
"""

import json
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

from compactlab.boolring.upset import UPSet
from compactlab.errors import ConsistencyError
from compactlab.rings.base import FiniteRing
from compactlab.topspace.space import FiniteSpace

Reproducible = FiniteRing | FiniteSpace | UPSet | list[UPSet] | dict[str, Any] | None


def reproducer_for(source: Reproducible) -> str | None:
    """The description text of a ring, space, or list of periodic sets."""
    match source:
        case None:
            return None
        case FiniteRing():
            return json.dumps(source.describe(), sort_keys=True)
        case FiniteSpace():
            return json.dumps(source.describe(), sort_keys=True)
        case UPSet():
            return json.dumps(source.to_dict(), sort_keys=True)
        case list():
            return json.dumps([s.to_dict() for s in source], sort_keys=True)
        case _:
            return json.dumps(source, sort_keys=True)


@dataclass(frozen=True)
class CheckRecord:
    """
    Args:
        check: Stable name of the property checked
        instance: Short description of the instance
        passed: Whether the property held
        witness: JSON-serializable evidence
        reproducer: Inline description of the instance (failing records only)
    """

    check: str
    instance: str
    passed: bool
    witness: Any = None
    reproducer: str | None = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "check": self.check,
            "instance": self.instance,
            "passed": self.passed,
            "witness": self.witness,
        }
        if self.reproducer is not None:
            data["reproducer"] = self.reproducer
        return data


@dataclass
class SuiteResult:
    suite_id: str
    records: list[CheckRecord] = field(default_factory=list)
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def add(
        self,
        check: str,
        instance: str,
        passed: bool,
        witness: Any = None,
        source: Reproducible = None,
    ) -> None:
        """Append a record; ``source`` is only described when the check failed."""
        reproducer = None if passed else reproducer_for(source)
        self.records.append(CheckRecord(check, instance, bool(passed), witness, reproducer))

    @contextmanager
    def guarded(self, check: str, instance: str, source: Reproducible = None) -> Iterator[None]:
        """Turn a ConsistencyError raised inside the block into a failing record."""
        try:
            yield
        except ConsistencyError as e:
            self.add(check, instance, False, {"consistency": str(e)}, source)

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "suite": self.suite_id,
            "passed": self.passed,
            "checks": len(self.records),
            "failures": len(self.failures),
            "records": [record.to_dict() for record in self.records],
        }
        if timings and self.seconds is not None:
            data["seconds"] = round(self.seconds, 3)
        return data


@dataclass
class Report:
    suites: list[SuiteResult]
    timings: bool = False

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def summary(self) -> dict[str, int]:
        return {
            "suites": len(self.suites),
            "checks": sum(len(suite.records) for suite in self.suites),
            "failures": sum(len(suite.failures) for suite in self.suites),
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "summary": self.summary(),
            "suites": [suite.to_dict(self.timings) for suite in self.suites],
        }
