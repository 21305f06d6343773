import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from trtimex import ReferenceDate, default_lexicon  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
TABLES = ROOT / "corpus" / "tables"

# acceptance criterion id -> (passed, detail); filled by test_acceptance
CRITERIA: dict = {}


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def ref():
    return ReferenceDate(2015, 3, 23)


@pytest.fixture(scope="session")
def tables_dir():
    return TABLES


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA):
        passed, detail = CRITERIA[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {key}: {detail}")
