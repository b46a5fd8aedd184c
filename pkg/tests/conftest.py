import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance criterion verdicts after the capture ends."""
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
