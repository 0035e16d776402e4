"""Prints one pass/fail line per acceptance criterion after a run."""

import re

CRITERIA = {
    1: "invariant counts across the family catalog",
    2: "pairing-rank route agrees with the matrix-rank route",
    3: "virtual-copy specs verify with zero residuals",
    4: "transcribed bracket tables reproduced exactly",
    5: "generated Casimirs invariant, complete, independent",
    6: "computed invariants never involve x_E",
    7: "weighted contraction carries the copy to the target",
    8: "skew weighting rejected, naive copy fails",
    9: "randomized property suites, 100 cases each",
}

_PATTERN = re.compile(r"test_criterion_(\d+)\b")
_RESULTS = {}


def pytest_runtest_logreport(report):
    m = _PATTERN.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call":
        _RESULTS[n] = report.outcome == "passed"
    elif report.outcome not in ("passed", "skipped"):
        _RESULTS[n] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(_RESULTS):
        status = "PASS" if _RESULTS[n] else "FAIL"
        terminalreporter.write_line(
            "criterion %d: %s - %s" % (n, status, CRITERIA.get(n, "")))
