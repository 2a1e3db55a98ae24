from __future__ import annotations

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.failed:
        _criteria[props["criterion"]] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda k: int(k.split(".")[0])):
        terminalreporter.write_line(f"{_criteria[name]}  criterion {name}")
