"""Structured pass/fail records for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    id: str
    citation: str
    expected: str
    actual: str
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, id, citation, expected, actual, passed=None):
        expected, actual = str(expected), str(actual)
        if passed is None:
            passed = expected == actual
        self.checks.append(Check(id, citation, expected, actual, bool(passed)))

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def to_json_obj(self):
        return {
            "suite": self.suite,
            "checks": [
                {
                    "id": check.id,
                    "citation": check.citation,
                    "expected": check.expected,
                    "actual": check.actual,
                    "pass": check.passed,
                }
                for check in self.checks
            ],
            "overall": self.overall,
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def render_text(self) -> str:
        rows = [("check", "status", "expected", "actual")]
        for check in self.checks:
            rows.append((check.id, "pass" if check.passed else "FAIL",
                         check.expected, check.actual))
        widths = [max(len(row[i]) for row in rows) for i in range(3)]
        lines = ["suite %s: %s" % (self.suite, "pass" if self.overall else "FAIL")]
        for row in rows:
            lines.append("  %s  %s  %s  %s" % (
                row[0].ljust(widths[0]), row[1].ljust(widths[1]),
                row[2].ljust(widths[2]), row[3]))
        return "\n".join(lines)


def emit(reports, fmt: str) -> str:
    """Deterministic rendering of one or more reports."""
    reports = list(reports)
    if fmt == "json":
        if len(reports) == 1:
            return reports[0].render_json()
        return json.dumps([r.to_json_obj() for r in reports], indent=2)
    if fmt == "text":
        return "\n\n".join(r.render_text() for r in reports)
    raise ValueError("unknown format %r" % fmt)
