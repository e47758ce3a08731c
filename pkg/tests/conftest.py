import pytest

from satake.rootdatum import build_from_cartan_type

SMALL_TYPES = ["A1", "A2", "B2", "G2"]
ISOGENIES = ["sc", "adjoint"]

ACCEPTANCE_LINES = []


def datum(cartan_type, isogeny="sc"):
    return build_from_cartan_type(cartan_type, isogeny)


@pytest.fixture
def a1_ad():
    return datum("A1", "adjoint")


@pytest.fixture
def a1_sc():
    return datum("A1", "sc")


@pytest.fixture
def a2_sc():
    return datum("A2", "sc")


@pytest.fixture
def a2_ad():
    return datum("A2", "adjoint")


@pytest.fixture
def b2_sc():
    return datum("B2", "sc")


@pytest.fixture
def g2():
    return datum("G2", "sc")


@pytest.fixture(params=[(t, i) for t in SMALL_TYPES for i in ISOGENIES], ids=lambda p: f"{p[0]}-{p[1]}")
def small_datum(request):
    return datum(*request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
