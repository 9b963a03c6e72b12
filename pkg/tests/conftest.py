import os

import pytest
from hypothesis import HealthCheck, settings

from bdforest.graph_core import Graph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("long", deadline=None, max_examples=1000)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Collects the one-line verdicts of the acceptance criteria."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


A, B, C, D = range(4)


@pytest.fixture
def o1_graph():
    # a-b, b-c, c-d form the forest; a-c is the star forest.
    return Graph.from_pairs(4, [(A, B), (B, C), (C, D), (A, C)])
