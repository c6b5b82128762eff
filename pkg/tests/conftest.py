import pathlib
import sys

TESTS_DIR = pathlib.Path(__file__).parent
FIXTURES = TESTS_DIR / "fixtures"

sys.path.insert(0, str(TESTS_DIR))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    rows = []
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", "call") != "call" and status != "error":
                continue
            if "test_acceptance.py" not in report.nodeid:
                continue
            name = report.nodeid.split("::")[-1]
            rows.append((name, status == "passed"))
    if not rows:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, ok in rows:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
