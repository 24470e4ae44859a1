import pytest

from skewbrace.brace import brace_from_tables, make_trivial_or_almost
from skewbrace.enumeration import enumerate_braces
from skewbrace.groups import cyclic_group, symmetric_group

# lines recorded by tests/test_acceptance.py, echoed in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def e4_tables():
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(a + b + 2 * a * b) % 4 for b in range(4)] for a in range(4)]
    return add, mul


def tables(B):
    return [list(r) for r in B.add.table], [list(r) for r in B.mul.table]


@pytest.fixture(scope="session")
def E4():
    return brace_from_tables(*e4_tables())


@pytest.fixture(scope="session")
def S3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def AT6(S3):
    return make_trivial_or_almost(S3, "almost-trivial")


@pytest.fixture(scope="session")
def A3(S3):
    return frozenset(a for a in range(6) if S3.element_orders[a] in (1, 3))


@pytest.fixture(scope="session")
def trivial_Z4():
    return make_trivial_or_almost(cyclic_group(4), "trivial")


@pytest.fixture(scope="session")
def small_catalog():
    """All braces of orders 1..6 as (id, brace) pairs."""
    return [(e.id, e.brace) for n in range(1, 7) for e in enumerate_braces(n)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
