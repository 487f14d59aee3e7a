import time

import pytest

ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


class Criterion:
    def __init__(self, results, number, title, limit):
        self.results = results
        self.number = number
        self.title = title
        self.limit = limit
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None
        if ok and elapsed >= self.limit:
            ok = False
            self.detail = f"took {elapsed:.2f}s, limit {self.limit}s"
        elif not ok:
            self.detail = str(exc).splitlines()[0] if str(exc) else exc_type.__name__
        self.results.append((self.number, self.title, ok, elapsed, self.detail))
        if exc_type is None and not ok:
            raise AssertionError(self.detail)
        return False


@pytest.fixture
def criterion(request):
    results = request.config.stash[ACCEPTANCE]

    def make(number, title, limit):
        return Criterion(results, number, title, limit)

    return make


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, detail in sorted(results):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] {number:>2}. {title} ({elapsed:.2f}s)"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
