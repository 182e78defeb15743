import pytest

from stte import catalogue
from stte.rmap import RMap
from stte.search import enumerate_solutions


@pytest.fixture(scope="session")
def solutions():
    return enumerate_solutions()


@pytest.fixture(scope="session")
def reference():
    return catalogue.load_reference()


@pytest.fixture(scope="session")
def ref_by_id(reference):
    return {e.id: e for e in reference}


@pytest.fixture(scope="session")
def R(ref_by_id):
    """Catalogue solutions by id: ``R(37)``."""

    def lookup(rid: int) -> RMap:
        return ref_by_id[rid].rmap

    return lookup


@pytest.fixture(scope="session")
def reports(solutions):
    return catalogue.analyze(solutions)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion test."""
    label = request.node.get_closest_marker("criterion").args[0]
    state = {"detail": ""}
    yield state
    state["passed"] = getattr(request.node, "criterion_passed", False)
    ACCEPTANCE_LINES.append((label, request.node.nodeid, state))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("criterion"):
        item.criterion_passed = rep.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label, _, state in sorted(ACCEPTANCE_LINES, key=lambda x: x[0]):
        verdict = "PASS" if state.get("passed") else "FAIL"
        terminalreporter.write_line(f"{verdict} {label} {state['detail']}")
