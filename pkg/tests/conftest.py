import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is None or rep.when != "call":
        return
    n, title = m.args
    prev = _RESULTS.get(n, ("PASS", title))[0]
    verdict = "PASS" if rep.passed and prev == "PASS" else "FAIL"
    _RESULTS[n] = (verdict, title)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        verdict, title = _RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {verdict} - {title}")


@pytest.fixture(scope="session")
def corpus():
    from parcross.corpus import generate_corpus
    return generate_corpus(0, 50)
