from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from leebounds import LinearCode, Modulus

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("default")

# criterion number -> (passed, one-line detail); filled by test_acceptance.py
CRITERIA: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, checks: list[tuple[str, bool, str]]) -> tuple[bool, str]:
    failed = [f"{name} ({detail})" for name, ok, detail in checks if not ok]
    passed = not failed
    detail = f"{len(checks)} checks" if passed else "; ".join(failed)
    CRITERIA[number] = (passed, detail)
    return passed, detail


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")


def load(name: str) -> LinearCode:
    data = json.loads((DATA / f"{name}.json").read_text())
    return LinearCode.from_generators(data["generators"], Modulus(data["p"], data["s"]))


@pytest.fixture
def data_dir() -> Path:
    return DATA
