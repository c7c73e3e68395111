import pytest

from ssbtma import ArrayGeometry, DesignSpec, make_design, make_plan, build_excitations

# (L, rho) rows of the reference design table
TABLE_ROWS = [(3, 0.35), (5, 0.21), (9, 0.10), (15, 0.05)]


@pytest.fixture(scope="session")
def table_designs():
    return {L: make_design(L, rho) for L, rho in TABLE_ROWS}


@pytest.fixture(scope="session")
def spec3():
    """L=3 design with xi pinned to four decimals."""
    return DesignSpec(L=3, rho=0.35, xi=0.2762)


@pytest.fixture(scope="session")
def geo20():
    return ArrayGeometry.uniform(20)


@pytest.fixture(scope="session")
def steered3(spec3, geo20):
    plan = make_plan(spec3, geo20, {1: 120.0, 2: 60.0, 3: 75.0})
    return plan, build_excitations(spec3, plan)


@pytest.fixture(scope="session")
def broadside3(spec3, geo20):
    plan = make_plan(spec3, geo20)
    return plan, build_excitations(spec3, plan)


_ACCEPTANCE = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE:
        terminalreporter.write_line(line)
