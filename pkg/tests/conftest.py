from __future__ import annotations

import sys
from itertools import combinations


def all_sets(n_min: int, n_max: int):
    """Every Schubert set S with max(S) = n for n in the given range."""
    for n in range(n_min, n_max + 1):
        for size in range(n):
            for rest in combinations(range(1, n), size):
                yield rest + (n,)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
