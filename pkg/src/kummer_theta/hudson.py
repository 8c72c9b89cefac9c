"""The Hudson table and the d = 3 correspondence built on it.

The table is the multiplication table of its first column
``(1, ac', ba', cb')`` against its first row ``(1, ab', bc', ca')``::

    1    ab'  bc'  ca'
    ac'  a'   c    bb'
    ba'  cc'  b'   a
    cb'  b    aa'  c'

Two distinct points share a row or a column exactly when ``q_1`` of their
product is 1, which turns the table into a picture of every theta
characteristic at once.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .f2 import ONE, POINTS, TorsionPoint, parse_label
from .theta import Config, ConfigError, q_of_config, q_one, six_set

ROW_HEADERS = tuple(parse_label(s) for s in ("1", "ac'", "ba'", "cb'"))
COLUMN_HEADERS = tuple(parse_label(s) for s in ("1", "ab'", "bc'", "ca'"))


@dataclass(frozen=True)
class HudsonTable:
    grid: tuple[tuple[TorsionPoint, ...], ...]

    def entry(self, i: int, j: int) -> TorsionPoint:
        """Entry at 1-based row ``i`` and column ``j``."""
        return self.grid[i - 1][j - 1]

    def position(self, u: TorsionPoint) -> tuple[int, int]:
        """1-based ``(row, column)`` of ``u``."""
        return self._positions[u]

    @cached_property
    def _positions(self) -> dict[TorsionPoint, tuple[int, int]]:
        return {
            u: (i + 1, j + 1)
            for i, row in enumerate(self.grid)
            for j, u in enumerate(row)
        }

    def render(self, marks: dict[TorsionPoint, str] | None = None) -> str:
        """Text rendering; ``marks`` replaces labels by symbols (e.g. ``*``)."""
        cells = [
            [marks.get(u, ".") if marks is not None else str(u) for u in row]
            for row in self.grid
        ]
        width = max(len(c) for row in cells for c in row)
        lines = []
        for i, row in enumerate(cells):
            head, *rest = (c.ljust(width) for c in row)
            lines.append(f"{head} | {' '.join(rest)}".rstrip())
            if i == 0:
                lines.append("-" * (width + 1) + "+" + "-" * (3 * (width + 1)))
        return "\n".join(lines)


def build_table() -> HudsonTable:
    grid = tuple(tuple(r * c for c in COLUMN_HEADERS) for r in ROW_HEADERS)
    return HudsonTable(grid)


TABLE = build_table()


def shares_line(u: TorsionPoint, v: TorsionPoint) -> bool:
    """True iff the distinct points ``u``, ``v`` share a row or column."""
    if u == v:
        raise ValueError(f"shares_line needs distinct points, got {u} twice")
    (ru, cu), (rv, cv) = TABLE.position(u), TABLE.position(v)
    return ru == rv or cu == cv


def incidence_166() -> list[list[int]]:
    """16x16 matrix ``M[v][u] = 1`` iff ``u`` lies in ``6_v``, rows in ``POINTS`` order."""
    return [[int(u in six_set(v)) for u in POINTS] for v in POINTS]


def _as_config(xi) -> Config:
    return xi if isinstance(xi, Config) else Config(xi)


def _require_triple(xi: Config) -> None:
    if xi.d != 3 or xi.r != 2:
        raise ConfigError(f"expected three points of A[2], got d={xi.d}")


def bx_point(xi: Config | Iterable[TorsionPoint]) -> TorsionPoint:
    """The point ``x`` whose nodal curve B_x carries the sheaf attached to ``xi``.

    ``xi`` must be a triple with ``q(xi) = 1``.  The grid search (``x`` not in
    ``xi`` and collinear with all three points) and the ``6_1`` search
    (``{xu, xv, xw}`` inside ``6_1``) are run independently and must agree.
    """
    xi = _as_config(xi)
    _require_triple(xi)
    if q_of_config(xi) != 1:
        raise ConfigError(f"bx_point needs q(xi) = 1, got q{xi} = 0")
    by_grid = [
        x for x in POINTS if x not in xi and all(shares_line(x, u) for u in xi)
    ]
    six_one = six_set(ONE)
    by_form = [x for x in POINTS if all(x * u in six_one for u in xi)]
    assert len(by_grid) == 1 and by_grid == by_form, (xi, by_grid, by_form)
    return by_grid[0]


def divisor_centers(xi: Config | Iterable[TorsionPoint]) -> list[TorsionPoint]:
    """All ``z`` usable as the leading point of the divisor ``z + zu + zv + zw``."""
    xi = _as_config(xi)
    _require_triple(xi)
    if q_of_config(xi) == 1:
        return [bx_point(xi)]
    return [z for z in POINTS if all(q_one(z * u) == 0 for u in xi)]


@dataclass(frozen=True)
class Divisor:
    """A formal sum of points, e.g. ``1 + ab' + bc' + ca'``."""

    parts: tuple[TorsionPoint, ...]

    def __init__(self, parts: Iterable[TorsionPoint]):
        object.__setattr__(self, "parts", tuple(sorted(parts)))

    @classmethod
    def parse(cls, text: str) -> Divisor:
        return cls(parse_label(s) for s in text.split("+"))

    @property
    def multiset(self) -> Counter:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


def divisor_of(xi: Config | Iterable[TorsionPoint]) -> Divisor:
    """Divisor ``z + zu + zv + zw`` paired with the triple ``xi = (u, v, w)``.

    For ``q(xi) = 0`` there may be several valid ``z``; they are all checked
    to produce the same divisor.
    """
    xi = _as_config(xi)
    centers = divisor_centers(xi)
    assert centers, f"no divisor center for {xi}"
    divisors = {Divisor([z, *(z * u for u in xi)]) for z in centers}
    assert len(divisors) == 1, (xi, divisors)
    return divisors.pop()


def curve_of(xi: Config | Iterable[TorsionPoint]) -> str:
    """Name of the supporting curve: ``"C"`` or ``"B_x"`` with the label of ``x``."""
    xi = _as_config(xi)
    _require_triple(xi)
    return f"B_{bx_point(xi)}" if q_of_config(xi) == 1 else "C"
