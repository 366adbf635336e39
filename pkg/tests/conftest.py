"""Shared test plumbing.

Acceptance tests append one line per criterion to CRITERION_LINES; the
terminal-summary hook replays them at the end of the run so the verdicts
stay visible without -s.
"""

CRITERION_LINES = []


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
