import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latcut import generators as gen  # noqa: E402
from latcut.poset import build_poset  # noqa: E402

ACCEPTANCE = {}


@pytest.fixture
def b2():
    return gen.boolean(2)


@pytest.fixture
def b3():
    return gen.boolean(3)


@pytest.fixture
def n5():
    return gen.pentagon()


@pytest.fixture
def m3():
    return gen.diamond()


@pytest.fixture
def chain3():
    return gen.chain(3)


@pytest.fixture
def anti2():
    return build_poset(2, [])


@pytest.fixture
def div12():
    return gen.divisor(12)


def record_acceptance(number, title, passed):
    ACCEPTANCE[number] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}")
