import pytest

from bingray import gray_oracle as go
from bingray.counting import bpc
from bingray.errors import DomainError
from bingray.partition import EMPTY, parse


def P(text):
    return parse(text)


def short(p):
    """Shorthand with the parts concatenated, e.g. 88422."""
    return "".join(str(x) for x in p.parts()) or "∅"


PUBLISHED_HEAD = "∅ 2 22 4 42 222 2222 422 44 8 82 442 4222 22222 222222 42222 4422 822 84 444".split()


def test_B0():
    assert go.gray_B_n(0) == [go.PaddedPartition(EMPTY, 0)]


def test_B4_hand_expansion():
    got = [(p.even_part, p.ones) for p in go.gray_B_n(4)]
    assert got == [(EMPTY, 4), (P("2"), 2), (P("2^2"), 0), (P("4"), 0)]


def test_B8_tail():
    tail = [p.even_part for p in go.gray_B_n(8)[-4:]]
    assert [short(p) for p in tail] == ["2222", "422", "44", "8"]


def test_odd_n_appends_a_one():
    for n in range(1, 40, 2):
        assert go.gray_B_n(n) == [go.PaddedPartition(p.even_part, p.ones + 1) for p in go.gray_B_n(n - 1)]


def test_prefix_examples():
    assert go.gray_prefix(1) == [EMPTY]
    assert [short(p) for p in go.gray_prefix(6)] == PUBLISHED_HEAD[:6]
    assert [short(p) for p in go.gray_prefix(20)] == PUBLISHED_HEAD
    assert go.gray_prefix(0) == []


def test_closed_forms_examples():
    assert go.closed_S(12) == go.PaddedPartition(P("4^3"), 0)
    assert go.closed_R(8) == P("2^4")
    assert go.closed_R(6) == P("4 2")
    assert go.closed_R(2) == P("2")
    assert go.closed_Q(5) == go.PaddedPartition(EMPTY, 5)
    assert go.closed_S(7) == go.PaddedPartition(P("2^3"), 1)
    with pytest.raises(ValueError):
        go.closed_R(7)
    with pytest.raises(ValueError):
        go.closed_R(0)


def test_closed_forms_agree_with_construction():
    prefix = go.gray_prefix(bpc(128))
    for n in range(0, 129, 2):
        seq = go.gray_B_n(n)
        assert seq[0] == go.closed_Q(n)
        assert seq[-1] == go.closed_S(n)
        if n >= 2:
            assert prefix[bpc(n - 2)] == go.closed_R(n)
    for n in range(1, 60, 2):
        seq = go.gray_B_n(n)
        assert seq[0] == go.closed_Q(n)
        assert seq[-1] == go.closed_S(n)


def test_prefix_stability():
    # prefix-of is transitive, so consecutive even sizes cover every pair n < m
    previous = None
    for n in range(0, 129, 2):
        current = [p.even_part for p in go.gray_B_n(n)]
        if previous is not None:
            assert current[: len(previous)] == previous, n
        previous = current
    assert previous == go.gray_prefix(bpc(128))


def test_doubled_block_sizes():
    for n in range(0, 129, 2):
        assert sum(1 for p in go.gray_B_n(n) if p.ones == 0) == bpc(n // 2)


def test_halved_view_examples():
    got = go.halved_view([EMPTY, P("2"), P("2^2"), P("4")])
    assert [(p.even_part, p.ones) for p in got] == [(EMPTY, 0), (EMPTY, 1), (EMPTY, 2), (P("2"), 0)]
    assert go.halved_view([P("4^2")])[0] == go.PaddedPartition(P("2^2"), 0)
    with pytest.raises(DomainError):
        go.halved_view([go.PaddedPartition(P("4"), 1)])


def test_halved_view_is_gray_with_unit_moves():
    halves = go.halved_view(go.gray_prefix(2000))
    kinds = set()
    for a, b in zip(halves, halves[1:]):
        mv = go.move_between(a.full_digits(), b.full_digits(), allow_unit=True)
        assert mv is not None, (a, b)
        kinds.add(mv[0])
    assert "add1" in kinds


def test_halved_view_size_slices():
    """Sum-n terms of B/2 equal B(n) for even n and reversed B(n) for odd n."""
    halves = go.halved_view(go.gray_prefix(bpc(2 * 30)))
    for n in range(0, 31):
        slice_n = [p for p in halves if p.total == n]
        expected = go.gray_B_n(n)
        assert slice_n == (expected if n % 2 == 0 else expected[::-1]), n


def test_enumerate_all_examples():
    assert go.enumerate_all(0) == {()}
    assert go.enumerate_all(4) == {((4, 1),), ((2, 2),), ((2, 1), (1, 2)), ((1, 4),)}
    assert len(go.enumerate_all(8)) == 10


def test_move_between():
    assert go.move_between({1: 2}, {2: 1}) == ("merge", 1)
    assert go.move_between({2: 1}, {1: 2}) == ("split", 1)
    assert go.move_between({0: 2}, {1: 1}) == ("merge", 0)
    assert go.move_between({1: 1}, {1: 2}) is None
    assert go.move_between({1: 1}, {1: 1, 0: 1}) is None
    assert go.move_between({1: 1}, {1: 1, 0: 1}, allow_unit=True) == ("add1", 0)
    assert go.move_between({3: 1}, {1: 4}) is None


@pytest.mark.parametrize("n", [0, 1, 2, 9, 30, 64])
def test_padded_totals(n):
    assert all(p.total == n for p in go.gray_B_n(n))
