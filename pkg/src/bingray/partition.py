"""Even binary partitions: representation, text format and the halve/double maps.

A partition is stored by its digits ``d_k``, the number of parts of size
``2**k``.  Only levels ``k >= 1`` are kept; parts of size 1 never appear
in the even sequence, so the constructor refuses them.

Two text styles are understood::

    caret   "256^5 32^2 16^1 4^4 2^3"   (canonical)
    plus    "8+8+4+2+2"

and the empty partition is written ``-`` in both.  Canonical caret output
always carries the multiplicity, except that a partition consisting of a
single part is written as that part alone (``"8"``).  On input ``^1`` is
optional everywhere.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import DomainError, PartitionSyntaxError

__all__ = [
    "BinaryPartition",
    "EMPTY",
    "parse",
    "format_partition",
    "size",
    "floor_halve",
    "double",
]

_TOKEN = re.compile(r"^(\d+)(?:\^(-?\d+))?$")


class BinaryPartition:
    """Immutable sparse digit map ``level -> count`` over levels ``>= 1``.

    Levels are kept in descending order so the largest and second-largest
    occupied levels are the first two entries of :attr:`levels`.
    """

    __slots__ = ("_levels", "_hash")

    def __init__(self, digits: Union[Mapping[int, int], Iterable[Tuple[int, int]], None] = None):
        if digits is None:
            items: Iterable[Tuple[int, int]] = ()
        elif isinstance(digits, Mapping):
            items = digits.items()
        else:
            items = digits
        acc: dict = {}
        for level, count in items:
            level = int(level)
            count = int(count)
            if level < 0:
                raise ValueError(f"negative level {level}")
            if count < 0:
                raise ValueError(f"negative digit {count} at level {level}")
            if count == 0:
                continue
            if level == 0:
                raise DomainError("parts of size 1 are not stored in an even binary partition")
            acc[level] = acc.get(level, 0) + count
        self._levels = tuple(sorted(acc.items(), reverse=True))
        self._hash = None

    @classmethod
    def _from_sorted(cls, levels):
        # trusted constructor: levels already descending, digits positive
        obj = cls.__new__(cls)
        obj._levels = levels
        obj._hash = None
        return obj

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "BinaryPartition":
        """Build from an iterable of part sizes (each a power of two >= 2)."""
        acc: dict = {}
        for part in parts:
            part = int(part)
            if part < 1 or part & (part - 1):
                raise PartitionSyntaxError(f"part {part} is not a power of two")
            if part == 1:
                raise DomainError("part of size 1 is not allowed")
            level = part.bit_length() - 1
            acc[level] = acc.get(level, 0) + 1
        return cls(acc)

    @property
    def levels(self) -> Tuple[Tuple[int, int], ...]:
        """``(level, digit)`` pairs, descending by level."""
        return self._levels

    @property
    def digits(self) -> dict:
        return dict(self._levels)

    def digit(self, level: int) -> int:
        for k, d in self._levels:
            if k == level:
                return d
            if k < level:
                break
        return 0

    @property
    def size(self) -> int:
        return sum(d << k for k, d in self._levels)

    @property
    def num_parts(self) -> int:
        return sum(d for _, d in self._levels)

    def parts(self) -> Iterator[int]:
        """Parts in descending order."""
        for k, d in self._levels:
            part = 1 << k
            for _ in range(d):
                yield part

    def floor_halve(self) -> "BinaryPartition":
        return BinaryPartition._from_sorted(
            tuple((k - 1, d) for k, d in self._levels if k > 1)
        )

    def double(self) -> "BinaryPartition":
        return BinaryPartition._from_sorted(tuple((k + 1, d) for k, d in self._levels))

    def to_text(self, style: str = "caret") -> str:
        return format_partition(self, style)

    def __bool__(self):
        return bool(self._levels)

    def __len__(self):
        return len(self._levels)

    def __eq__(self, other):
        if not isinstance(other, BinaryPartition):
            return NotImplemented
        return self._levels == other._levels

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._levels)
        return self._hash

    def __str__(self):
        return format_partition(self)

    def __repr__(self):
        return f"BinaryPartition({format_partition(self)!r})"


EMPTY = BinaryPartition()


def _power_level(text: str) -> int:
    value = int(text)
    if value < 1 or value & (value - 1):
        raise PartitionSyntaxError(f"part {text!r} is not a power of two")
    if value == 1:
        raise DomainError("part of size 1 is not allowed")
    return value.bit_length() - 1


def parse(text: str) -> BinaryPartition:
    """Parse caret or plus notation; token order is irrelevant and repeats add up.

    >>> parse("8+8+4+2+2").digits
    {3: 2, 2: 1, 1: 2}
    >>> parse("2 2^3")
    BinaryPartition('2^4')
    >>> str(parse("16 4 4"))
    '16^1 4^2'
    """
    if not isinstance(text, str):
        raise PartitionSyntaxError(f"expected a string, got {type(text).__name__}")
    text = text.strip()
    if not text:
        raise PartitionSyntaxError("empty input (use '-' for the empty partition)")
    if text == "-":
        return EMPTY
    acc: dict = {}
    if "+" in text:
        tokens = [t.strip() for t in text.split("+")]
        for tok in tokens:
            if not tok.isdigit():
                raise PartitionSyntaxError(f"malformed part {tok!r}")
            level = _power_level(tok)
            acc[level] = acc.get(level, 0) + 1
    else:
        for tok in text.split():
            m = _TOKEN.match(tok)
            if m is None:
                raise PartitionSyntaxError(f"malformed token {tok!r}")
            mult = 1 if m.group(2) is None else int(m.group(2))
            if mult <= 0:
                raise PartitionSyntaxError(f"multiplicity must be positive in {tok!r}")
            level = _power_level(m.group(1))
            acc[level] = acc.get(level, 0) + mult
    return BinaryPartition(acc)


def format_partition(p: BinaryPartition, style: str = "caret") -> str:
    if style not in ("caret", "plus"):
        raise ValueError(f"unknown style {style!r}")
    if not p._levels:
        return "-"
    if style == "caret":
        levels = p._levels
        if len(levels) == 1 and levels[0][1] == 1:
            return str(1 << levels[0][0])
        return " ".join(f"{1 << k}^{d}" for k, d in levels)
    return "+".join(str(part) for part in p.parts())


def size(p: BinaryPartition) -> int:
    return p.size


def floor_halve(p: BinaryPartition) -> BinaryPartition:
    """Halve every part and drop the parts that become 1."""
    return p.floor_halve()


def double(p: BinaryPartition) -> BinaryPartition:
    return p.double()
