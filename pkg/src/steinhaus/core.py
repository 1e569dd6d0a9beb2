"""Binary sequences, the derivative operator and Steinhaus triangles.

A sequence ``x = (x_0, ..., x_{n-1})`` is packed into a Python ``int`` with
``x_i`` stored at bit ``i``.  The derivative ``(x_0+x_1, ..., x_{n-2}+x_{n-1})``
over F_2 is then a single shift-and-XOR: ``(v ^ (v >> 1))`` masked to
``n - 1`` bits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BinarySequence",
    "SteinhausTriangle",
    "derivative",
    "iter_rows",
    "partial_weight",
    "render",
    "sequence_weight",
    "triangle",
    "triangle_weight",
    "unit_vector",
]


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class BinarySequence:
    """A finite 0/1 sequence packed into an integer (bit ``i`` is ``x_i``)."""

    value: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"length must be nonnegative, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BinarySequence:
        value = 0
        length = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"entry {i} is {b!r}, expected 0 or 1")
            value |= b << i
            length += 1
        return cls(value, length)

    @classmethod
    def from_string(cls, text: str) -> BinarySequence:
        """Parse a 0/1 string, index 0 leftmost."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    @classmethod
    def zeros(cls, n: int) -> BinarySequence:
        return cls(0, n)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __xor__(self, other: BinarySequence) -> BinarySequence:
        if self.length != other.length:
            raise ValueError("sequences must have equal length")
        return BinarySequence(self.value ^ other.value, self.length)

    def reversed(self) -> BinarySequence:
        return BinarySequence.from_bits(reversed(self.bits))

    def weight(self) -> int:
        return self.value.bit_count()

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def unit_vector(k: int, n: int) -> BinarySequence:
    """The canonical basis vector ``e_k`` of length ``n``."""
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    return BinarySequence(1 << k, n)


def derivative(x: BinarySequence) -> BinarySequence:
    if x.length <= 1:
        return BinarySequence(0, 0)
    n = x.length - 1
    return BinarySequence((x.value ^ (x.value >> 1)) & _mask(n), n)


def sequence_weight(x: BinarySequence) -> int:
    return x.value.bit_count()


@dataclass(frozen=True)
class SteinhausTriangle:
    """Rows ``x, dx, d^2 x, ..., d^{n-1} x`` of the triangle seeded by ``x``."""

    rows: tuple[BinarySequence, ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("a triangle has at least one row")
        for r, row in enumerate(self.rows):
            if row.length != n - r:
                raise ValueError(f"row {r} has length {row.length}, expected {n - r}")
            if r and derivative(self.rows[r - 1]) != row:
                raise ValueError(f"row {r} is not the derivative of row {r - 1}")

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def seed(self) -> BinarySequence:
        return self.rows[0]

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def __xor__(self, other: SteinhausTriangle) -> SteinhausTriangle:
        if self.size != other.size:
            raise ValueError("triangles must have equal size")
        return SteinhausTriangle(tuple(a ^ b for a, b in zip(self.rows, other.rows)))


def iter_rows(x: BinarySequence) -> Iterator[BinarySequence]:
    """Yield the rows of ``T(x)`` one at a time without storing them."""
    row = x
    for _ in range(x.length):
        yield row
        row = derivative(row)


def triangle(x: BinarySequence) -> SteinhausTriangle:
    if x.length < 1:
        raise ValueError("triangle seed must be nonempty")
    return SteinhausTriangle(tuple(iter_rows(x)))


def _packed_partial_weight(value: int, n: int, m: int) -> int:
    total = 0
    for length in range(n, n - m, -1):
        total += value.bit_count()
        value = (value ^ (value >> 1)) & _mask(length - 1)
    return total


def triangle_weight(t: SteinhausTriangle | BinarySequence) -> int:
    """Number of ones in the triangle.

    Accepts either a materialized triangle or its seed; the seed form streams
    the rows in O(n) memory.
    """
    if isinstance(t, BinarySequence):
        if t.length < 1:
            raise ValueError("triangle seed must be nonempty")
        return _packed_partial_weight(t.value, t.length, t.length)
    return sum(sequence_weight(row) for row in t.rows)


def partial_weight(x: BinarySequence, m: int) -> int:
    """Total weight of rows ``0 .. m-1`` of ``T(x)``."""
    if not 1 <= m <= x.length:
        raise ValueError(f"need 1 <= m <= {x.length}, got m={m}")
    return _packed_partial_weight(x.value, x.length, m)


def render(t: SteinhausTriangle, style: str = "digits", symbols: Sequence[str] = "01") -> str:
    """Lay the triangle out as centered text, one line per row.

    ``style="digits"`` prints 0/1.  ``style="signs"`` maps each bit through
    ``symbols`` (``symbols[0]`` for 0, ``symbols[1]`` for 1) and defaults to
    ``-`` / ``+``.
    """
    if style == "digits":
        chars = "01"
    elif style == "signs":
        chars = "-+" if symbols == "01" else symbols
    else:
        raise ValueError(f"unknown style {style!r}")
    if len(chars) != 2:
        raise ValueError("symbols must map exactly two values")
    lines = [" " * r + " ".join(chars[b] for b in row) for r, row in enumerate(t.rows)]
    return "\n".join(lines)
