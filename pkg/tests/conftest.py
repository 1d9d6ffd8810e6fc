"""Shared fixtures and the acceptance summary printed at the end of a run."""

from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # acceptance tests attach ("acceptance", (number, ok, title, detail)) via record_property
    rows = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", "call") != "call":
                continue
            rows += [v for k, v in getattr(rep, "user_properties", []) if k == "acceptance"]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, title, detail in sorted(rows):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
