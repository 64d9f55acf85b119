import re
from collections import defaultdict

import pytest

from tdsr.smallgraphs import connected_corpus


@pytest.fixture(scope="session")
def corpus8():
    """All connected graphs of order 3..8 up to isomorphism."""
    return connected_corpus(3, 8)


@pytest.fixture(scope="session")
def corpus7():
    return connected_corpus(3, 7)


def pytest_terminal_summary(terminalreporter):
    verdicts = defaultdict(list)
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" or "test_acceptance" not in rep.nodeid:
                continue
            m = re.search(r"test_criterion_(\d+)", rep.nodeid)
            if m:
                verdicts[int(m.group(1))].append(outcome == "passed")
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(verdicts):
        status = "PASS" if all(verdicts[num]) else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {status}")
