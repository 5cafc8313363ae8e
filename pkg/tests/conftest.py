import pytest

TITLES = {
    1: "operator algebra",
    2: "Hamiltonian equivalences",
    3: "Bogoliubov vs ED",
    4: "identity chain I",
    5: "critical points",
    6: "superradiant identities",
    7: "finite-size transition",
    8: "exploratory gap minimum and BCH order",
    9: "sweep determinism",
}

_outcomes: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number the test belongs to")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes.setdefault(marker, []).append((report.nodeid.split("::")[-1], report.passed))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(TITLES):
        results = _outcomes.get(n)
        if not results:
            continue
        ok = all(passed for _, passed in results)
        failed = [name for name, passed in results if not passed]
        line = f"criterion {n} ({TITLES[n]}): {'PASS' if ok else 'FAIL'}"
        if failed:
            line += "  [failing: " + ", ".join(failed) + "]"
        terminalreporter.write_line(line)
