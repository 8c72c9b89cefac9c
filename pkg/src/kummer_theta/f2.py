"""The symplectic F2-vector space A[2] = F2^{2r}.

Points are stored as integers whose binary expansion, read big-endian, gives
the coordinates over the ordered basis ``(x_1, ..., x_r, y_1, ..., y_r)``
with ``<x_i, y_j> = delta_ij``.  For ``r = 2`` this basis is
``(a, b, b', a')``, so ``"1000"`` is ``a`` and ``"0001"`` is ``a'``.

Hudson's labels (``1, a, b, c, a', b', c'`` and their products) are
available for ``r = 2``; other ranks print as bit strings.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce, total_ordering
from typing import Iterable

MAX_RANK = 8

# unprimed part lives in the X block (a, b), primed part in the Y block (b', a')
_UNPRIMED = {0b00: "", 0b10: "a", 0b01: "b", 0b11: "c"}
_PRIMED = {0b00: "", 0b01: "a'", 0b10: "b'", 0b11: "c'"}
_TOKEN_BITS = {
    "1": 0b0000,
    "a": 0b1000,
    "b": 0b0100,
    "c": 0b1100,
    "a'": 0b0001,
    "b'": 0b0010,
    "c'": 0b0011,
}
_TOKEN_RE = re.compile(r"1|[abc]'?|.")

CANONICAL_LABELS = (
    "1", "a", "b", "c", "a'", "b'", "c'",
    "aa'", "ab'", "ac'", "ba'", "bb'", "bc'", "ca'", "cb'", "cc'",
)
_UNPRIMED_RANK = {0b00: 0, 0b10: 1, 0b01: 2, 0b11: 3}


def _label_rank(bits: int) -> int:
    """Position of a rank-2 point in ``CANONICAL_LABELS``."""
    x, y = _UNPRIMED_RANK[bits >> 2], bits & 0b11
    if y == 0:
        return x
    if x == 0:
        return 3 + y
    return 7 + 3 * (x - 1) + (y - 1)


_RANK_BY_BITS = tuple(_label_rank(bits) for bits in range(16))


class LabelError(ValueError):
    """A label could not be parsed into a point of A[2]."""


def _check_rank(r: int) -> None:
    if not isinstance(r, int) or not 1 <= r <= MAX_RANK:
        raise ValueError(f"rank r must be an integer in [1, {MAX_RANK}], got {r!r}")


def _parity(n: int) -> int:
    return bin(n).count("1") & 1


@total_ordering
@dataclass(frozen=True)
class TorsionPoint:
    """A point of A[2]; juxtaposition (``u * v``) is the group law.

    Points sort in Hudson's label order ``1, a, b, c, a', ...`` when
    ``r = 2`` and by coordinates otherwise.
    """

    bits: int
    r: int = 2

    def __post_init__(self):
        _check_rank(self.r)
        if not 0 <= self.bits < 1 << (2 * self.r):
            raise ValueError(f"bits {self.bits} out of range for r={self.r}")

    def __lt__(self, other: TorsionPoint) -> bool:
        if not isinstance(other, TorsionPoint):
            return NotImplemented
        return (self.r, self.sort_key) < (other.r, other.sort_key)

    @property
    def sort_key(self) -> int:
        return _RANK_BY_BITS[self.bits] if self.r == 2 else self.bits

    def __mul__(self, other: TorsionPoint) -> TorsionPoint:
        if not isinstance(other, TorsionPoint):
            return NotImplemented
        if other.r != self.r:
            raise ValueError("points live in spaces of different rank")
        return TorsionPoint(self.bits ^ other.bits, self.r)

    @property
    def coords(self) -> tuple[int, ...]:
        n = 2 * self.r
        return tuple((self.bits >> (n - 1 - i)) & 1 for i in range(n))

    @property
    def x_part(self) -> int:
        return self.bits >> self.r

    @property
    def y_part(self) -> int:
        return self.bits & ((1 << self.r) - 1)

    @property
    def is_identity(self) -> bool:
        return self.bits == 0

    def bitstring(self) -> str:
        return format(self.bits, f"0{2 * self.r}b")

    def label(self) -> str:
        if self.r != 2:
            return self.bitstring()
        text = _UNPRIMED[self.x_part] + _PRIMED[self.y_part]
        return text or "1"

    def __str__(self) -> str:
        return self.label()

    def __repr__(self) -> str:
        return f"TorsionPoint({self.label()!r})"


@dataclass(frozen=True)
class WeilPairing:
    """Non-degenerate alternating form pairing x_i with y_i."""

    r: int = 2

    def __post_init__(self):
        _check_rank(self.r)

    def __call__(self, u: TorsionPoint, v: TorsionPoint) -> int:
        return pairing(u, v)

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        n = 2 * self.r
        basis = [TorsionPoint(1 << (n - 1 - i), self.r) for i in range(n)]
        return tuple(tuple(pairing(e, f) for f in basis) for e in basis)


def pairing(u: TorsionPoint, v: TorsionPoint) -> int:
    """Weil pairing <u, v> in {0, 1}."""
    if u.r != v.r:
        raise ValueError("points live in spaces of different rank")
    return _parity((u.x_part & v.y_part) ^ (u.y_part & v.x_part))


def all_points(r: int = 2) -> tuple[TorsionPoint, ...]:
    _check_rank(r)
    return tuple(sorted(TorsionPoint(i, r) for i in range(1 << (2 * r))))


def make_space(r: int = 2) -> tuple[tuple[TorsionPoint, ...], WeilPairing]:
    """Return all ``2^{2r}`` points of F2^{2r} together with the pairing."""
    _check_rank(r)
    return all_points(r), WeilPairing(r)


def identity(r: int = 2) -> TorsionPoint:
    return TorsionPoint(0, r)


def group_sum(points: Iterable[TorsionPoint], r: int = 2) -> TorsionPoint:
    """Product of ``points`` in the group law; the empty product is ``1``."""
    return reduce(lambda u, v: u * v, points, identity(r))


def parse_label(text: str, r: int = 2) -> TorsionPoint:
    """Parse a Hudson label such as ``"ab'"`` or a big-endian bit string.

    Labels are read as products of the symbols ``1, a, b, c, a', b', c'``,
    so ``"ab"`` parses to ``c``.  The typographic prime is accepted.
    """
    s = text.strip().replace("′", "'")
    if not s:
        raise LabelError("empty label")
    if len(s) == 2 * r and set(s) <= {"0", "1"}:
        return TorsionPoint(int(s, 2), r)
    if r != 2:
        raise LabelError(f"expected a {2 * r}-bit string for r={r}, got {text!r}")
    bits = 0
    for token in _TOKEN_RE.findall(s):
        if token not in _TOKEN_BITS:
            raise LabelError(f"unknown token {token!r} in label {text!r}")
        bits ^= _TOKEN_BITS[token]
    return TorsionPoint(bits, 2)


def parse_points(text: str, r: int = 2) -> list[TorsionPoint]:
    """Parse a comma-separated list of labels."""
    parts = text.split(",")
    if any(not p.strip() for p in parts):
        raise LabelError(f"empty entry in point list {text!r}")
    return [parse_label(p, r) for p in parts]


def format_points(points: Iterable[TorsionPoint]) -> str:
    return ",".join(str(p) for p in points)


POINTS, PAIRING = make_space(2)
ONE = identity(2)
A, B, C = parse_label("a"), parse_label("b"), parse_label("c")
A1, B1, C1 = parse_label("a'"), parse_label("b'"), parse_label("c'")
