"""Verification reports: named checks with residuals, and serializers."""

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float | None = None
    details: str = ""

    @property
    def status(self):
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    subject: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, passed, residual=None, details=""):
        self.checks.append(CheckResult(name, bool(passed), residual, details))
        return self.checks[-1]

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __bool__(self):
        return self.passed


def _payload(report, reproducible):
    data = {
        "subject": report.subject,
        "overall": "pass" if report.passed else "fail",
        "checks": [
            {
                "name": c.name,
                "status": c.status,
                "residual": c.residual,
                "details": c.details,
            }
            for c in report.checks
        ],
        "notes": list(report.notes),
    }
    if not reproducible:
        data["generated"] = datetime.now(timezone.utc).isoformat()
    return data


def report_emit(report, fmt="json", reproducible=False):
    """Serialize a report (or list of reports) as json, text or csv."""
    reports = report if isinstance(report, list) else [report]
    if fmt == "json":
        payload = [_payload(r, reproducible) for r in reports]
        return json.dumps(payload[0] if not isinstance(report, list) else payload,
                          indent=2) + "\n"
    if fmt == "text":
        lines = []
        for r in reports:
            lines.append(f"== {r.subject}: {'PASS' if r.passed else 'FAIL'} ==")
            width = max((len(c.name) for c in r.checks), default=0)
            for c in r.checks:
                res = "" if c.residual is None else f"  residual={c.residual:.3e}"
                det = f"  {c.details}" if c.details else ""
                lines.append(f"  {c.name:<{width}}  {c.status:>4}{res}{det}")
            for note in r.notes:
                lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["subject", "check", "status", "residual", "details"])
        for r in reports:
            for c in r.checks:
                writer.writerow(
                    [r.subject, c.name, c.status,
                     "" if c.residual is None else repr(c.residual), c.details]
                )
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
