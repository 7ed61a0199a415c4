import sys
from pathlib import Path

import pytest

from srw import bipyramid_complex, bipyramidal_graph, stanley_reisner_ideal

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            num, title = mark.args
            _criteria.setdefault(num, {"title": title, "outcomes": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (report.when == "call" or report.failed or report.skipped):
        _criteria[mark.args[0]]["outcomes"].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        info = _criteria[num]
        outs = info["outcomes"]
        if not outs:
            status = "NOT RUN"
        elif all(o == "passed" for o in outs):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {info['title']}")


@pytest.fixture(scope="session")
def b4():
    return stanley_reisner_ideal(bipyramid_complex(4))


@pytest.fixture(scope="session")
def d4():
    return stanley_reisner_ideal(bipyramidal_graph(4))


def family_ideal(family, n):
    c = bipyramid_complex(n) if family == "B" else bipyramidal_graph(n)
    return stanley_reisner_ideal(c)
