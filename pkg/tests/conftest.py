import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion label")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if call.when == "setup":
        _CRITERIA[name] = "FAIL" if call.excinfo else _CRITERIA.get(name, "FAIL")
    elif call.when == "call":
        _CRITERIA[name] = "FAIL" if call.excinfo else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda n: int(n.split(".")[0])):
        terminalreporter.write_line(f"[{_CRITERIA[name]}] {name}")
