import pytest

from bingray import gray_oracle
from bingray.partition import BinaryPartition

_ACCEPTANCE_LINES = []


def even_partitions_up_to(max_size):
    """All even binary partitions of size <= max_size, from brute-force enumeration."""
    out = []
    for n in range(0, max_size + 1, 2):
        for ms in gray_oracle.enumerate_all(n):
            if any(part == 1 for part, _ in ms):
                continue
            out.append(BinaryPartition.from_parts(part for part, mult in ms for _ in range(mult)))
    return out


@pytest.fixture(scope="session")
def small_partitions():
    return even_partitions_up_to(64)


@pytest.fixture(scope="session")
def prefix_10k():
    return gray_oracle.gray_prefix(10_000)


@pytest.fixture
def acceptance_report():
    def record(label, passed, elapsed):
        _ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'} {label} ({elapsed:.2f}s)")
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
