"""Random access into B: index ``k`` (1-based) <-> partition ``B_k``.

Both directions go through the trail of a partition, the sizes seen while
repeatedly halving every part and discarding the ones::

    88422 -> 442 -> 22 -> (empty)        trail (24, 10, 4)

Size-``n`` partitions fill the index block ``(b(n-2), b(n)]``.  Inside that
block, position ``l`` holds the double of ``B_l`` when ``n = 0 mod 4``; for
``n = 2 mod 4`` the block runs backwards and position ``b(n) + 1 - k``
gives ``l``.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .counting import DEFAULT_TABLE, CountTable
from .errors import DomainError
from .partition import BinaryPartition

__all__ = [
    "trail",
    "partition_from_trail",
    "validate_trail",
    "rank",
    "unrank",
    "trail_of_index",
    "unrank_path",
]

Trail = Tuple[int, ...]


def trail(p: BinaryPartition) -> Trail:
    """Sizes of ``p``, ``floor(p/2)``, ``floor(p/4)``, ... without trailing zeros."""
    out = []
    while p:
        out.append(p.size)
        p = p.floor_halve()
    return tuple(out)


def validate_trail(t: Sequence[int]) -> Trail:
    t = tuple(int(x) for x in t)
    for pos, tau in enumerate(t):
        if tau <= 0 or tau & 1:
            raise DomainError(f"trail entry {pos} must be a positive even integer, got {tau}")
        if pos and 2 * tau > t[pos - 1]:
            raise DomainError(
                f"trail entry {pos} ({tau}) exceeds half of the previous entry ({t[pos - 1]})"
            )
    return t


def partition_from_trail(t: Sequence[int]) -> BinaryPartition:
    """Invert :func:`trail`: ``d_i = tau_{i-1}/2 - tau_i``."""
    t = validate_trail(t) + (0,)
    digits = {i: t[i - 1] // 2 - t[i] for i in range(1, len(t))}
    return BinaryPartition(digits)


def rank(p: BinaryPartition, table: Optional[CountTable] = None) -> int:
    """1-based position of ``p`` in B."""
    b = table if table is not None else DEFAULT_TABLE
    ell = 1
    for tau in reversed(trail(p)):
        if tau % 4 == 0:
            ell = b[tau - 2] + ell
        else:
            ell = b[tau] + 1 - ell
    return ell


def unrank_path(k: int, table: Optional[CountTable] = None) -> List[Tuple[int, int]]:
    """The ``(index, size)`` pairs visited while peeling ``k`` down to the empty partition."""
    if k < 1:
        raise DomainError(f"indices start at 1, got {k}")
    b = table if table is not None else DEFAULT_TABLE
    path = []
    while k > 1:
        n = b.size_of_index(k)
        path.append((k, n))
        if n % 4 == 0:
            k = k - b[n - 2]
        else:
            k = b[n] + 1 - k
    return path


def trail_of_index(k: int, table: Optional[CountTable] = None) -> Trail:
    return tuple(n for _, n in unrank_path(k, table))


def unrank(k: int, table: Optional[CountTable] = None) -> BinaryPartition:
    """The partition ``B_k``."""
    return partition_from_trail(trail_of_index(k, table))
