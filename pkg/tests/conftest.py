from __future__ import annotations

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.getreports(outcome):
            if rep.when != "call":
                continue
            m = _CRITERION.search(rep.nodeid)
            if m:
                title = m.group(2).replace("_", " ")
                lines.append((int(m.group(1)), f"criterion {int(m.group(1)):2d} {outcome.upper():6s} {title}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
