"""Loopless successor/predecessor in the Gray sequence of even binary partitions.

Write a partition by its digits ``d_k`` (parts of size ``2**k``), let ``i``
and ``j`` be the largest and second-largest occupied levels (``j = 0`` if
there is no second level) and let ``eps = (-1)**(d_1 + ... + d_{i-1})``.
The next move depends only on ``d_i``, ``d_j`` and ``eps``.  Call the
direction *aligned* when ``eps == +1`` going forward or ``eps == -1``
going backward:

====  ==========================  ===============================
rule  condition                   move
====  ==========================  ===============================
a     d_i == 1, not aligned       split a largest part
b     d_i odd > 1, not aligned    merge two largest parts
c     d_i odd, d_j == 1, aligned  split a second-largest part
d     d_i odd, aligned, not (c)   merge two second-largest parts
e     d_i even, not aligned       split a largest part
f     d_i even, aligned           merge two largest parts
====  ==========================  ===============================

With ``j = 0`` rule (d) merges two invisible ones into a new 2, and a split
at level 1 throws the two resulting ones away, so the size of the
partition moves by 2.  Forward from the empty partition is the lone case
outside the table; it is reported as rule (f) at level 0.

Every move touches only the first two or three nodes of a descending
linked list of occupied levels, and the sign of ``eps`` changes by a
factor that depends only on the rule, ``d_j`` and whether ``i == j + 1``:

====  ====================================
rule  eps flips when
====  ====================================
a     i == j + 1 and d_j is odd
b     always
c     always
d     i != j + 1
e     never
f     never
====  ====================================
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import StartOfSequence
from .partition import BinaryPartition

__all__ = [
    "Move",
    "GrayCursor",
    "cursor_from",
    "classify",
    "step",
    "cursor_partition",
    "successor",
    "predecessor",
    "epsilon_of",
    "eps_flips",
    "walk",
    "FORWARD",
    "BACKWARD",
]

FORWARD = True
BACKWARD = False

MERGE = "merge"
SPLIT = "split"


@dataclass(frozen=True)
class Move:
    """One transition: ``level`` is ``k`` in ``2^k + 2^k <-> 2^(k+1)``."""

    rule: str
    action: str
    level: int
    size_delta: int


class _Node:
    __slots__ = ("level", "digit", "prev", "next")

    def __init__(self, level, digit, prev=None, next=None):
        self.level = level
        self.digit = digit
        self.prev = prev
        self.next = next


def epsilon_of(p: BinaryPartition) -> int:
    """``(-1)**(sum of d_k for 1 <= k < i)`` computed from scratch."""
    levels = p.levels
    return -1 if sum(d for _, d in levels[1:]) & 1 else 1


def eps_flips(rule: str, i: int, j: int, dj: int) -> bool:
    if rule in ("b", "c"):
        return True
    if rule == "d":
        return i != j + 1
    if rule == "a":
        return i == j + 1 and bool(dj & 1)
    return False


def _rule(di: int, dj: int, aligned: bool) -> str:
    if di & 1:
        if aligned:
            return "c" if dj == 1 else "d"
        return "a" if di == 1 else "b"
    return "f" if aligned else "e"


class GrayCursor:
    """Mutable position in B supporting constant-time steps in both directions.

    ``touches`` is the number of list nodes read, written, created or
    unlinked by the last :meth:`step`.
    """

    __slots__ = ("_head", "epsilon", "index", "size", "touches")

    def __init__(self, p: BinaryPartition = BinaryPartition(), index: Optional[int] = None):
        self._head = None
        tail = None
        for level, digit in p.levels:
            node = _Node(level, digit, tail)
            if tail is None:
                self._head = node
            else:
                tail.next = node
            tail = node
        self.epsilon = epsilon_of(p)
        self.size = p.size
        self.index = index
        self.touches = 0

    # -- reading -----------------------------------------------------------

    def partition(self) -> BinaryPartition:
        levels = []
        node = self._head
        while node is not None:
            levels.append((node.level, node.digit))
            node = node.next
        return BinaryPartition._from_sorted(tuple(levels))

    def top(self):
        """``(i, d_i, j, d_j)`` with zeros standing for missing levels."""
        head = self._head
        if head is None:
            return 0, 0, 0, 0
        second = head.next
        if second is None:
            return head.level, head.digit, 0, 0
        return head.level, head.digit, second.level, second.digit

    def classify(self, forward: bool = True) -> str:
        head = self._head
        if head is None:
            if not forward:
                raise StartOfSequence("the empty partition has no predecessor")
            return "f"
        second = head.next
        dj = second.digit if second is not None else 0
        return _rule(head.digit, dj, (self.epsilon == 1) == forward)

    # -- list surgery ------------------------------------------------------

    def _insert_after(self, node, level, digit):
        new = _Node(level, digit, node, node.next)
        if node.next is not None:
            node.next.prev = new
        node.next = new
        return new

    def _unlink(self, node):
        if node.prev is None:
            self._head = node.next
        else:
            node.prev.next = node.next
        if node.next is not None:
            node.next.prev = node.prev

    def _add_two_below(self, node):
        """Add two parts one level below ``node``; level 0 parts are dropped.

        Returns the number of extra nodes touched.
        """
        level = node.level - 1
        if level == 0:
            return 0
        nxt = node.next
        if nxt is not None and nxt.level == level:
            nxt.digit += 2
            return 1
        self._insert_after(node, level, 2)
        return 2 if nxt is not None else 1

    # -- stepping ----------------------------------------------------------

    def step(self, forward: bool = True) -> Move:
        head = self._head
        if head is None:
            if not forward:
                raise StartOfSequence("the empty partition has no predecessor")
            self._head = _Node(1, 1)
            self.size = 2
            self.touches = 1
            if self.index is not None:
                self.index += 1
            return Move("f", MERGE, 0, 2)

        i = head.level
        di = head.digit
        second = head.next
        if second is None:
            j = dj = 0
            touched = 1
        else:
            j = second.level
            dj = second.digit
            touched = 2
        rule = _rule(di, dj, (self.epsilon == 1) == forward)

        if rule in ("a", "e"):
            # split a largest part
            head.digit = di - 1
            touched += self._add_two_below(head)
            if di == 1:
                self._unlink(head)
            move = Move(rule, SPLIT, i - 1, -2 if i == 1 else 0)
        elif rule in ("b", "f"):
            # merge two largest parts
            new = _Node(i + 1, 1, None, head)
            head.prev = new
            self._head = new
            touched += 1
            head.digit = di - 2
            if di == 2:
                self._unlink(head)
            move = Move(rule, MERGE, i, 0)
        elif rule == "c":
            # split a second-largest part; d_j == 1 so its node goes away
            touched += self._add_two_below(second)
            self._unlink(second)
            move = Move(rule, SPLIT, j - 1, -2 if j == 1 else 0)
        else:
            # merge two second-largest parts (two invisible ones when j == 0)
            if j + 1 == i:
                head.digit = di + 1
            else:
                self._insert_after(head, j + 1, 1)
                touched += 1
            if second is not None:
                second.digit = dj - 2
                if dj == 2:
                    self._unlink(second)
            move = Move(rule, MERGE, j, 2 if j == 0 else 0)

        if eps_flips(rule, i, j, dj):
            self.epsilon = -self.epsilon
        self.size += move.size_delta
        if self.index is not None:
            self.index += 1 if forward else -1
        self.touches = touched
        return move

    def __iter__(self) -> Iterator[BinaryPartition]:
        """Yield the current partition and then every successor, forever."""
        yield self.partition()
        while True:
            self.step(True)
            yield self.partition()

    def __repr__(self):
        return f"GrayCursor({self.partition()!s}, epsilon={self.epsilon:+d})"


def cursor_from(p: BinaryPartition, index: Optional[int] = None) -> GrayCursor:
    return GrayCursor(p, index)


def classify(c: GrayCursor, forward: bool = True) -> str:
    return c.classify(forward)


def step(c: GrayCursor, forward: bool = True) -> Move:
    return c.step(forward)


def cursor_partition(c: GrayCursor) -> BinaryPartition:
    return c.partition()


def successor(p: BinaryPartition) -> BinaryPartition:
    c = GrayCursor(p)
    c.step(True)
    return c.partition()


def predecessor(p: BinaryPartition) -> BinaryPartition:
    c = GrayCursor(p)
    c.step(False)
    return c.partition()


def walk(p: BinaryPartition, steps: int, forward: bool = True) -> Iterator[tuple]:
    """Yield ``(partition_before, epsilon_before, move)`` for each of ``steps`` moves."""
    c = GrayCursor(p)
    for _ in range(steps):
        before = c.partition()
        eps = c.epsilon
        yield before, eps, c.step(forward)
