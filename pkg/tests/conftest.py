import re

import numpy as np
import pytest

from hwpkit import _backend, group, wigner

BACKENDS = _backend.available()


@pytest.fixture(params=BACKENDS, ids=lambda k: k.BACKEND)
def backend(request, monkeypatch):
    """Run the test once per importable kernel module."""
    monkeypatch.setattr(group, "kernels", request.param)
    monkeypatch.setattr(wigner, "kernels", request.param)
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter):
    seen = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") in ("call", "setup"):
                n = int(m.group(1))
                ok = outcome == "passed"
                seen[n] = seen.get(n, True) and ok
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(seen):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if seen[n] else 'FAIL'}")
