import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


class Criterion:
    def __init__(self, lines):
        self._lines = lines

    @contextmanager
    def __call__(self, number: int, title: str, limit: float | None = None):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            self._lines.append(f"[criterion {number}] FAIL {title} ({elapsed:.2f}s): {exc!r}"[:300])
            raise
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            self._lines.append(f"[criterion {number}] FAIL {title}: {elapsed:.2f}s exceeds {limit}s")
            pytest.fail(f"criterion {number} took {elapsed:.2f}s, limit {limit}s")
        budget = f" < {limit}s" if limit is not None else ""
        self._lines.append(f"[criterion {number}] PASS {title} ({elapsed:.2f}s{budget})")


@pytest.fixture
def criterion(request):
    return Criterion(request.config.stash[_LINES])


def pytest_terminal_summary(terminalreporter, config):
    lines = sorted(config.stash[_LINES], key=lambda s: int(s.split()[1].rstrip("]")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
