import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the one-line acceptance results after capture is released."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance summary")
        for line in lines:
            terminalreporter.write_line(line)
