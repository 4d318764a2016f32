from __future__ import annotations

import sys
from pathlib import Path

import pytest

from mbqcflow import OpenGraph, parse_open_graph

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))

FIG1_CAUSAL = {"a0": "b0", "a1": "b1", "a2": "b2", "b0": "c0", "b1": "c1", "b2": "c2"}
FIG1_CAUSAL_LAYERS = {"c0": 0, "c1": 0, "c2": 0, "b0": 1, "b1": 1, "b2": 1, "a2": 2, "a1": 3, "a0": 4}
FIG1_GFLOW = {
    "a0": {"b0", "b1", "b2"},
    "a1": {"b1", "b2"},
    "a2": {"b2"},
    "b0": {"c0"},
    "b1": {"c1"},
    "b2": {"c2"},
}
FIG1_GFLOW_LAYERS = {"c0": 0, "c1": 0, "c2": 0, "b0": 1, "b1": 1, "b2": 1, "a0": 2, "a1": 2, "a2": 2}


def load(name: str) -> OpenGraph:
    return parse_open_graph((DATA / name).read_text())


@pytest.fixture
def fig1() -> OpenGraph:
    return load("fig1.json")


@pytest.fixture
def c6_alt() -> OpenGraph:
    return load("c6_alt.json")


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = "error"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
