import re

import pytest

from liecheck.roots import build_root_system, default_types

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]
ALL = [str(t) for t in default_types()]


@pytest.fixture(scope="session")
def rs():
    return build_root_system


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, built from the acceptance test outcomes."""
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when != "call" and status != "error":
                continue
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", rep.nodeid)
            if m:
                results.setdefault(int(m.group(1)), []).append((m.group(2), status == "passed"))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        parts = results[num]
        ok = all(p for _, p in parts)
        detail = ", ".join(f"{name}={'pass' if p else 'FAIL'}" for name, p in parts)
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  ({detail})")
