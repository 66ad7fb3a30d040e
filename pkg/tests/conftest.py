import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance suite's per-criterion lines after the run."""
    lines = []
    for name, mod in list(sys.modules.items()):
        if name.rpartition(".")[2] == "test_acceptance":
            lines = getattr(mod, "REPORT_LINES", [])
            break
    if not lines:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
