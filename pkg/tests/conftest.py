import json
from pathlib import Path

import pytest
from hypothesis import settings

from rouquier import load_group

GOLDEN = Path(__file__).parent / "golden"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def printed():
    return json.loads((GOLDEN / "printed_blocks.json").read_text())


@pytest.fixture(scope="session")
def G4():
    return load_group("G4")


@pytest.fixture(scope="session")
def G6():
    return load_group("G6")


@pytest.fixture(scope="session")
def G7():
    return load_group("G7")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
