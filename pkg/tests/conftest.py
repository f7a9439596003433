from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", []) if mod else []
    if lines:
        terminalreporter.ensure_newline()
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
