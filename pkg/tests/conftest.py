import pytest

_results: dict[int, list[tuple[str, str]]] = {}
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    _titles[number] = title
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(number, []).append((item.name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        outcomes = _results[number]
        ok = all(o == "passed" for _, o in outcomes)
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:2d}: {_titles[number]}"
        if not ok:
            bad = ", ".join(name for name, o in outcomes if o != "passed")
            line += f" (failed: {bad})"
        terminalreporter.write_line(line)
