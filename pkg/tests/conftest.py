import pytest

from weylmonoid.coxeter import weyl_group
from weylmonoid.gcm import REFERENCE_MATRICES, reference
from weylmonoid.grammar import parse_element, parse_word

INSTANCES = tuple(REFERENCE_MATRICES)


def group_of(name):
    return weyl_group(reference(name))


def elem(g, text):
    m, tag = parse_element(g, text)
    assert tag == "Exact"
    return m


def word(g, text):
    return parse_word(g, text)


@pytest.fixture(params=INSTANCES)
def any_group(request):
    return group_of(request.param)


@pytest.fixture
def A2():
    return group_of("A2")


@pytest.fixture
def A3():
    return group_of("A3")


@pytest.fixture
def affA1():
    return group_of("affA1")


@pytest.fixture
def H2():
    return group_of("H2")


@pytest.fixture
def blockH2A1():
    return group_of("blockH2A1")


@pytest.fixture
def hyp3():
    return group_of("hyp3")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
