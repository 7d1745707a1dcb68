"""Verification reports: a header line `<title> — PASS|FAIL`, then one glyph-prefixed line per
check. Every CLI subcommand and every `verify_*` entry point returns one of these.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from cyclobrauer.errors import EXIT_VERIFY

OK = "ok"
WARN = "warn"
FAIL = "fail"

SCHEMA = "cyclobrauer.report/1"

_GLYPH = {OK: "ok ", WARN: "!! ", FAIL: "XX "}


@dataclass
class Check:
    level: str  # OK | WARN | FAIL
    name: str
    detail: str

    def to_json(self) -> dict:
        return {"level": self.level, "name": self.name, "detail": self.detail}


def check(ok: bool, name: str, detail: str, *, warn_only: bool = False) -> Check:
    if ok:
        return Check(OK, name, detail)
    return Check(WARN if warn_only else FAIL, name, detail)


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def healthy(self) -> bool:
        return not any(c.level == FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.healthy else EXIT_VERIFY

    def add(self, ok: bool, name: str, detail: str, *, warn_only: bool = False) -> bool:
        self.checks.append(check(ok, name, detail, warn_only=warn_only))
        return ok

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(c.level, f"{prefix}{c.name}", c.detail))
        if other.data:
            self.data[prefix.rstrip(":. ") or other.title] = other.data

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.level == FAIL]

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "title": self.title,
            "ok": self.healthy,
            "checks": [c.to_json() for c in self.checks],
            "data": self.data,
        }


def render_text(report: Report) -> str:
    lines = [f"{report.title} — {'PASS' if report.healthy else 'FAIL'}"]
    width = max((len(c.name) for c in report.checks), default=0)
    width = min(max(width, 14), 40)
    for c in report.checks:
        lines.append(f"  {_GLYPH.get(c.level, '   ')}{c.name:<{width}} {c.detail}")
    for key, value in report.data.items():
        if isinstance(value, dict | list) and len(str(value)) > 100:
            continue
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)
