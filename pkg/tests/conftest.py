import os
import shlex
import shutil

import pytest

from smtgi import SolverConfig

SOLVER_CMD = os.environ.get("SMT_SOLVER_CMD", "z3 -in")

_criteria = []


@pytest.fixture(scope="session")
def solver():
    if shutil.which(shlex.split(SOLVER_CMD)[0]) is None:
        pytest.fail(f"SMT solver not found: {SOLVER_CMD!r} (pip install z3-solver)")
    return SolverConfig(SOLVER_CMD, timeout=120)


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary is printed at the end of the run."""
    def record(number, ok, detail):
        _criteria.append((number, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_criteria, key=lambda c: c[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
