from itertools import product

import pytest
from hypothesis import settings

from edgedepth.graphs import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def monomials_up_to(n, degree):
    """Every exponent vector in n variables of total degree <= degree."""
    for exps in product(range(degree + 1), repeat=n):
        if sum(exps) <= degree:
            yield exps


@pytest.fixture
def P3():
    return Graph.path(3)


@pytest.fixture
def P5():
    return Graph.path(5)


@pytest.fixture
def C5():
    return Graph.cycle(5)


@pytest.fixture
def K3():
    return Graph.complete(3)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
