"""Verification reports and their text rendering."""

from __future__ import annotations

from cyclobrauer.errors import EXIT_VERIFY
from cyclobrauer.report import SCHEMA, Report, render_text


def test_warnings_do_not_fail_a_report():
    report = Report("demo")
    report.add(True, "one", "fine")
    report.add(False, "two", "soft", warn_only=True)
    assert report.healthy
    assert report.exit_code == 0


def test_failures_set_the_exit_code():
    report = Report("demo")
    report.add(False, "broken", "residual 1")
    assert not report.healthy
    assert report.exit_code == EXIT_VERIFY
    assert [c.name for c in report.failures()] == ["broken"]


def test_extend_prefixes_and_nests_data():
    inner = Report("inner")
    inner.add(True, "check", "ok")
    inner.data = {"x": 1}
    outer = Report("outer")
    outer.extend(inner, "sub: ")
    assert outer.checks[0].name == "sub: check"
    assert outer.data == {"sub": {"x": 1}}


def test_render_and_json():
    report = Report("demo")
    report.add(True, "basis", "8 regular monomials")
    report.data = {"dimension": 8, "long": list(range(100))}
    text = render_text(report)
    assert text.splitlines()[0] == "demo — PASS"
    assert "8 regular monomials" in text
    assert "dimension: 8" in text
    assert "long" not in text
    payload = report.to_json()
    assert payload["schema"] == SCHEMA
    assert payload["ok"] is True
