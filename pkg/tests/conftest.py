import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from editsimp.backends.mock import mock_backends  # noqa: E402

AVALANCHE = ("the announcement of the massive avalanche on mount everest shocked the climbing world , "
             "burying 25 nepalese sherpa guides under sheets of ice the size of houses .")
AVALANCHE_TREE = (
    "(S (NP (NP the announcement) (PP of (NP (NP the massive avalanche) (PP on (NP mount everest)))))"
    " (VP shocked (NP the climbing world)) (, ,)"
    " (S (VP burying (NP 25 nepalese sherpa guides)"
    " (PP under (NP (NP sheets) (PP of (NP ice))) (NP (NP the size) (PP of (NP houses))))))"
    " (. .))"
)

_criteria = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        crit = getattr(report, "criterion", None)
        if crit is not None:
            _criteria[crit].append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcomes in sorted(_criteria.items()):
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(
            f"criterion {num}: {'PASS' if ok else 'FAIL'} - {title} ({len(outcomes)} checks)")


@pytest.fixture
def backends():
    return mock_backends()


@pytest.fixture
def avalanche_backends():
    b = mock_backends()
    b.parser.register(AVALANCHE, AVALANCHE_TREE)
    return b
