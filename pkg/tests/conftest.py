import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[int, tuple[str, bool]] = {}


def _criterion(item):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return None
    return marker.args[0], marker.args[1]


def pytest_runtest_makereport(item, call):
    info = _criterion(item)
    if info is None:
        return
    number, title = info
    _, ok = _criteria.get(number, (title, True))
    if call.excinfo is not None:
        ok = False
    _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"AC{number} {'PASS' if ok else 'FAIL'} {title}")
