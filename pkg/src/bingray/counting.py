"""The binary partition function b(n), memoized with exact integers.

    b(0) = 1
    b(n) = b(n-1)              n odd
    b(n) = b(n-1) + b(n/2)     n even
"""
from __future__ import annotations

import bisect
import threading

__all__ = ["CountTable", "DEFAULT_TABLE", "bpc", "size_of_index"]


class CountTable:
    """Grow-only table of b(0..capacity).

    Growth happens under a lock and entries are appended only once fully
    computed, so a reader indexing below ``len`` never sees a partial value.
    """

    def __init__(self, capacity: int = 0):
        self._values = [1]
        self._lock = threading.Lock()
        if capacity:
            self.ensure(capacity)

    @property
    def capacity(self) -> int:
        return len(self._values) - 1

    def ensure(self, n: int) -> None:
        if n < len(self._values):
            return
        with self._lock:
            values = self._values
            for m in range(len(values), n + 1):
                if m & 1:
                    values.append(values[m - 1])
                else:
                    values.append(values[m - 1] + values[m >> 1])

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"b(n) needs n >= 0, got {n}")
        if n >= len(self._values):
            self.ensure(n)
        return self._values[n]

    def values(self, n: int) -> list:
        """Copy of b(0..n)."""
        self.ensure(n)
        return self._values[: n + 1]

    def size_of_index(self, k: int) -> int:
        """Least n with k <= b(n).  The answer is always even."""
        if k < 1:
            raise ValueError(f"index must be >= 1, got {k}")
        n = max(self.capacity, 2)
        while self._values[-1] < k:
            n *= 2
            self.ensure(n)
        # b is nondecreasing and flat across odd steps, so the leftmost hit is even
        return bisect.bisect_left(self._values, k)


DEFAULT_TABLE = CountTable(64)


def bpc(n: int) -> int:
    """Number of binary partitions of ``n``."""
    return DEFAULT_TABLE[n]


def size_of_index(k: int) -> int:
    return DEFAULT_TABLE.size_of_index(k)
