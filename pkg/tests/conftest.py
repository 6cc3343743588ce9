import re

_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion."""
    status = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(report.nodeid)
            if m:
                status[int(m.group(1))] = (outcome == "passed")
    for k in sorted(status):
        terminalreporter.write_line(
            f"CRITERION {k}: {'PASS' if status[k] else 'FAIL'}")
