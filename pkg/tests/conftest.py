import pytest

from starfactor.bitset import full

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def assert_valid_tournament(t):
    """The three tournament invariants, checked from the raw rows."""
    n = t.n
    for i in range(n):
        assert not t.out[i] >> i & 1
        for j in range(n):
            if i != j:
                assert (t.out[i] >> j & 1) + (t.out[j] >> i & 1) == 1
    assert sum(r.bit_count() for r in t.out) == n * (n - 1) // 2
    assert all(r >> n == 0 for r in t.out)
    for v in range(n):
        assert t.out[v] & t.inn[v] == 0
        assert t.out[v] | t.inn[v] == full(n) ^ (1 << v)


@pytest.fixture
def valid():
    return assert_valid_tournament


@pytest.fixture
def acceptance():
    def record(label: str, passed: bool, detail: str = ""):
        _ACCEPTANCE.append((label, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label}" + (f" :: {detail}" if detail else ""))
