"""Invariant checks behind ``bingray selftest``."""
from __future__ import annotations

from typing import Callable, List, Tuple

from . import gray_oracle as go
from .counting import bpc
from .ranking import partition_from_trail, rank, trail, unrank
from .stepper import GrayCursor, epsilon_of

Check = Tuple[str, Callable[[int], None]]


def _counts(max_n):
    for n in range(max_n + 1):
        assert bpc(n) == go.count_all(n), f"b({n})"
    for n in range(0, max_n + 1, 2):
        assert bpc(n) == len(go.enumerate_all(n)), f"enumerate_all({n})"


def _gray_sets(max_n):
    for n in range(0, max_n + 1, 2):
        seq = go.gray_B_n(n)
        assert len(seq) == bpc(n), f"|B({n})|"
        assert {p.multiset() for p in seq} == go.enumerate_all(n), f"B({n}) as a set"
        assert seq[0] == go.closed_Q(n), f"Q({n})"
        assert seq[-1] == go.closed_S(n), f"S({n})"
        for a, b in zip(seq, seq[1:]):
            assert go.move_between(a.full_digits(), b.full_digits()) is not None, f"B({n}): {a} -> {b}"
        with_ones = [p.ones > 0 for p in seq]
        cut = with_ones.index(False) if False in with_ones else len(seq)
        assert not any(with_ones[cut:]), f"B({n}) ones prefix"
        if n and cut < len(seq):
            assert seq[cut].even_part.digit(1) > 0, f"B({n}) element after the ones prefix"


def _blocks(max_n):
    seq = go.gray_prefix(bpc(max_n))
    for n in range(2, max_n + 1, 2):
        lo, hi = bpc(n - 2), bpc(n)
        assert all(p.size == n for p in seq[lo:hi]), f"block {n}"
        assert seq[lo] == go.closed_R(n), f"R({n})"


def _stepper(max_n):
    ref = go.gray_prefix(bpc(max_n))
    c = GrayCursor()
    for pos, want in enumerate(ref):
        assert c.partition() == want, f"B_{pos + 1}"
        assert c.epsilon == epsilon_of(want), f"epsilon at B_{pos + 1}"
        if pos:
            back = GrayCursor(want)
            back.step(False)
            assert back.partition() == ref[pos - 1], f"predecessor of B_{pos + 1}"
        c.step(True)


def _ranking(max_n):
    for k, p in enumerate(go.gray_prefix(bpc(max_n)), start=1):
        assert rank(p) == k, f"rank(B_{k})"
        assert unrank(k) == p, f"unrank({k})"
        assert partition_from_trail(trail(p)) == p, f"trail of B_{k}"


CHECKS: List[Check] = [
    ("counting matches brute force", _counts),
    ("B(n) is a Gray ordering of all binary partitions", _gray_sets),
    ("size blocks and R(n) in B", _blocks),
    ("stepper matches the construction", _stepper),
    ("rank/unrank/trail round trips", _ranking),
]


def run(max_n: int = 64) -> List[Tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        try:
            fn(max_n)
        except AssertionError as exc:
            results.append((name, False, str(exc)))
        else:
            results.append((name, True, ""))
    return results
