import re
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    key = (int(m.group(1)), m.group(2).split("[")[0])
    failed = report.failed or (report.when == "call" and report.outcome != "passed")
    if report.when == "call" or report.failed:
        _results[key] = _results.get(key, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_results.items()):
        terminalreporter.write_line(
            f"criterion {num} ({name.replace('_', ' ')}): {'PASS' if ok else 'FAIL'}")
