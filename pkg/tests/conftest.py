import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from twistedweyl.affine import AffineWeylGroup
from twistedweyl.config import catalog
from twistedweyl.rootdata import build_root_datum

# acceptance lines collected by test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def group(cartan_type, lattice="simply_connected"):
    return AffineWeylGroup(build_root_datum(cartan_type, lattice))


@pytest.fixture(scope="session")
def configs():
    return catalog()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
