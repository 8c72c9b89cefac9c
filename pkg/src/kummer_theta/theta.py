"""Theta characteristics q_v on A[2] and the configuration invariant q(xi).

The base form ``q_1`` is the even form with ``q_1(x * y) = <x, y>`` for ``x``
in span(a, b) and ``y`` in span(b', a'); every other form is
``q_v(u) = q_1(u) + <v, u>``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from operator import xor
from typing import Iterable, Mapping

from .f2 import TorsionPoint, all_points, pairing, parse_points


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"


class ConfigError(ValueError):
    """Points do not form a valid configuration of distinct 2-torsion points."""


def q_one(u: TorsionPoint) -> int:
    """The distinguished even form, ``sum_i x_i(u) y_i(u)``."""
    return bin(u.x_part & u.y_part).count("1") & 1


@dataclass(frozen=True)
class ThetaForm:
    """The quadratic form ``q_v`` refining the Weil pairing."""

    index: TorsionPoint

    def __call__(self, u: TorsionPoint) -> int:
        if u.r != self.index.r:
            raise ValueError("points live in spaces of different rank")
        return self._table[u.bits]

    @cached_property
    def _table(self) -> tuple[int, ...]:
        r = self.index.r
        points = (TorsionPoint(bits, r) for bits in range(1 << (2 * r)))
        return tuple(q_one(u) ^ pairing(self.index, u) for u in points)

    @cached_property
    def values(self) -> Mapping[TorsionPoint, int]:
        return {u: self(u) for u in all_points(self.index.r)}

    @property
    def parity(self) -> Parity:
        return parity(self)


@lru_cache(maxsize=None)
def theta(v: TorsionPoint) -> ThetaForm:
    return ThetaForm(v)


def parity(q: ThetaForm) -> Parity:
    """Even iff the form vanishes on more than half the space (Arf invariant 0)."""
    n = len(q.values)
    zeros = sum(1 for value in q.values.values() if value == 0)
    # an even form on F2^{2r} has 2^{r-1}(2^r + 1) zeros; an odd one has 2^{r-1}(2^r - 1)
    return Parity.EVEN if 2 * zeros > n else Parity.ODD


def six_set(v: TorsionPoint) -> frozenset[TorsionPoint]:
    """The 6-element level set of ``q_v`` (``q_v = 1`` if even, ``q_v = 0`` if odd)."""
    q = theta(v)
    target = 1 if q.parity is Parity.EVEN else 0
    return frozenset(u for u, value in q.values.items() if value == target)


def ten_set(v: TorsionPoint) -> frozenset[TorsionPoint]:
    return frozenset(all_points(v.r)) - six_set(v)


def _point_key(p: TorsionPoint) -> int:
    return p.sort_key


@dataclass(frozen=True, order=True)
class Config:
    """A set of ``d`` distinct points of A[2] whose product is the identity.

    Points are kept in label order so equal configurations
    compare and hash equal whatever order they were given in.
    """

    points: tuple[TorsionPoint, ...]

    def __init__(self, points: Iterable[TorsionPoint]):
        pts = tuple(points)
        if not pts:
            raise ConfigError("a configuration needs at least one point")
        if len({p.r for p in pts}) != 1:
            raise ConfigError("points live in spaces of different rank")
        if len(set(pts)) != len(pts):
            repeated = sorted({p for p in pts if pts.count(p) > 1})
            raise ConfigError(
                "points must be distinct; repeated: "
                + ",".join(str(p) for p in repeated)
            )
        total = TorsionPoint(reduce(xor, (p.bits for p in pts)), pts[0].r)
        if not total.is_identity:
            raise ConfigError(f"points must sum to the identity; their product is {total}")
        object.__setattr__(self, "points", tuple(sorted(pts, key=_point_key)))

    @classmethod
    def from_labels(cls, text: str) -> Config:
        return cls(parse_points(text))

    @property
    def d(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return self.points[0].r

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, u) -> bool:
        return u in self.points

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.points) + ")"


def q_sum(points: Iterable[TorsionPoint], v: TorsionPoint | None = None) -> int:
    """``sum_u q_v(u)`` over ``points`` (``v`` defaults to the identity)."""
    pts = list(points)
    if v is None:
        return sum(q_one(u) for u in pts) & 1
    q = theta(v)
    return sum(q(u) for u in pts) & 1


def q_of_config(xi: Config) -> int:
    """``q(xi)``; independent of which theta characteristic is used."""
    return q_sum(xi.points)
