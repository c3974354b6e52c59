"""Reference construction of the Gray sequences, used to check the fast paths.

``gray_B_n(n)`` lists every binary partition of ``n`` (ones included) so
that neighbours differ by one ``2^k + 2^k <-> 2^(k+1)`` move:

* odd ``n``:        B(n-1), each with a 1 appended
* ``n = 0 mod 4``:  B(n-1)+1, then B(n/2) with every part doubled
* ``n = 2 mod 4``:  B(n-1)+1, then B(n/2) doubled and reversed

Unrolling the odd case, B(n) for even ``n`` is the concatenation of the
doubled blocks for ``m = 0, 2, ..., n`` padded with ones, which is how the
sequences are stored here: one cached block per even size.

``enumerate_all`` is a plain recursion on the largest allowed part and
shares no code with the construction above.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import islice
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import DomainError
from .partition import EMPTY, BinaryPartition

__all__ = [
    "PaddedPartition",
    "gray_B_n",
    "gray_prefix",
    "iter_gray",
    "block",
    "closed_Q",
    "closed_S",
    "closed_R",
    "halved_view",
    "enumerate_all",
    "count_all",
    "move_between",
]


@dataclass(frozen=True)
class PaddedPartition:
    """An even partition plus an explicit number of parts of size 1."""

    even_part: BinaryPartition
    ones: int = 0

    def __post_init__(self):
        if self.ones < 0:
            raise ValueError("ones must be nonnegative")

    @property
    def total(self) -> int:
        return self.even_part.size + self.ones

    def full_digits(self) -> Dict[int, int]:
        d = self.even_part.digits
        if self.ones:
            d[0] = self.ones
        return d

    def multiset(self) -> Tuple[Tuple[int, int], ...]:
        """``(part, multiplicity)`` pairs, descending, ones included."""
        out = tuple((1 << k, d) for k, d in self.even_part.levels)
        if self.ones:
            out += ((1, self.ones),)
        return out

    def doubled(self) -> BinaryPartition:
        """Double every part; the ones become twos."""
        levels = tuple((k + 1, d) for k, d in self.even_part.levels)
        if self.ones:
            levels += ((1, self.ones),)
        return BinaryPartition._from_sorted(levels)

    def __str__(self):
        text = "" if not self.even_part else str(self.even_part)
        if self.ones:
            text = f"{text} 1^{self.ones}".strip()
        return text or "-"


_blocks: Dict[int, Tuple[BinaryPartition, ...]] = {0: (EMPTY,)}
_blocks_lock = threading.RLock()


def block(m: int) -> Tuple[BinaryPartition, ...]:
    """Even partitions of size ``m`` in the order they appear in B (``m`` even)."""
    if m < 0 or m & 1:
        raise ValueError(f"blocks exist only for even sizes, got {m}")
    got = _blocks.get(m)
    if got is not None:
        return got
    with _blocks_lock:
        got = _blocks.get(m)
        if got is None:
            doubled = [p.doubled() for p in gray_B_n(m // 2)]
            if m % 4 == 2:
                doubled.reverse()
            got = tuple(doubled)
            _blocks[m] = got
        return got


def gray_B_n(n: int) -> List[PaddedPartition]:
    """The Gray ordering of all binary partitions of ``n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    top = n - (n & 1)
    out: List[PaddedPartition] = []
    for m in range(0, top + 1, 2):
        pad = n - m
        out.extend(PaddedPartition(p, pad) for p in block(m))
    return out


def iter_gray() -> Iterator[BinaryPartition]:
    """The infinite sequence B_1, B_2, ... of even binary partitions."""
    m = 0
    while True:
        yield from block(m)
        m += 2


def gray_prefix(limit: int) -> List[BinaryPartition]:
    """B_1 .. B_limit."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    return list(islice(iter_gray(), limit))


def closed_Q(n: int) -> PaddedPartition:
    return PaddedPartition(EMPTY, n)


def closed_S(n: int) -> PaddedPartition:
    """Last element of B(n): b copies of 2^a where n = 2^a * b, b odd; odd n adds a 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n & 1:
        prev = closed_S(n - 1)
        return PaddedPartition(prev.even_part, prev.ones + 1)
    if n == 0:
        return PaddedPartition(EMPTY, 0)
    a = (n & -n).bit_length() - 1
    return PaddedPartition(BinaryPartition({a: n >> a}), 0)


def closed_R(n: int) -> BinaryPartition:
    """First partition of size ``n`` in B."""
    if n < 2 or n & 1:
        raise ValueError(f"R(n) is defined for even n >= 2, got {n}")
    if n % 4 == 0:
        return BinaryPartition({1: n // 2})
    prev = closed_S(n - 2).even_part
    d = prev.digits
    d[1] = d.get(1, 0) + 1
    return BinaryPartition(d)


def halved_view(seq: Sequence[BinaryPartition]) -> List[PaddedPartition]:
    """Halve every part exactly; twos become explicit ones."""
    out = []
    for p in seq:
        if isinstance(p, PaddedPartition):
            if p.ones:
                raise DomainError("cannot halve a partition with parts of size 1")
            p = p.even_part
        out.append(PaddedPartition(p.floor_halve(), p.digit(1)))
    return out


def move_between(a: Dict[int, int], b: Dict[int, int], allow_unit: bool = False) -> Optional[Tuple[str, int]]:
    """Classify the change from digit map ``a`` to ``b``.

    Returns ``("merge", k)`` for ``2^k + 2^k -> 2^(k+1)``, ``("split", k)``
    for the reverse, and with ``allow_unit`` also ``("add1", 0)`` /
    ``("drop1", 0)`` for gaining or losing a single part of size 1.  Any
    other difference gives ``None``.
    """
    delta = {}
    for k in set(a) | set(b):
        d = b.get(k, 0) - a.get(k, 0)
        if d:
            delta[k] = d
    if len(delta) == 2:
        lo, hi = sorted(delta)
        if hi == lo + 1:
            if delta[lo] == -2 and delta[hi] == 1:
                return ("merge", lo)
            if delta[lo] == 2 and delta[hi] == -1:
                return ("split", lo)
    elif allow_unit and len(delta) == 1 and 0 in delta and abs(delta[0]) == 1:
        return ("add1", 0) if delta[0] == 1 else ("drop1", 0)
    return None


def _enumerate(n: int, level: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    if level == 0:
        yield ((1, n),) if n else ()
        return
    part = 1 << level
    for mult in range(n // part, -1, -1):
        head = ((part, mult),) if mult else ()
        for rest in _enumerate(n - mult * part, level - 1):
            yield head + rest


def enumerate_all(n: int) -> Set[Tuple[Tuple[int, int], ...]]:
    """Every partition of ``n`` into powers of two, as ``(part, mult)`` tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = max(n.bit_length() - 1, 0)
    return set(_enumerate(n, top))


def count_all(n: int) -> int:
    """Count the leaves of the ``enumerate_all`` recursion without materializing them."""
    memo: Dict[Tuple[int, int], int] = {}

    def count(rem: int, level: int) -> int:
        if level == 0:
            return 1
        key = (rem, level)
        if key not in memo:
            part = 1 << level
            memo[key] = sum(count(rem - mult * part, level - 1) for mult in range(rem // part + 1))
        return memo[key]

    return count(n, max(n.bit_length() - 1, 0))
