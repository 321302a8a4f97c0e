"""Print one PASS/FAIL line per acceptance criterion after the run."""

import re

import pytest

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_results: dict[int, list] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = _CRITERION.search(item.name)
    if m is None or (report.when != "call" and report.passed):
        return
    entry = _results.setdefault(int(m.group(1)), [True, set()])
    doc = (item.function.__doc__ or "").strip().splitlines()
    if doc:
        entry[1].add(doc[0].rstrip("."))
    if not report.passed:
        entry[0] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        ok, docs = _results[n]
        summary = "; ".join(sorted(docs))
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {summary}")
