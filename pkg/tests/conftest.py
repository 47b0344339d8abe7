import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[str, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(m.group(1), []).append((m.group(2), report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results, key=int):
        for name, outcome in _results[num]:
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {int(num):2d} [{status}] {name}")
