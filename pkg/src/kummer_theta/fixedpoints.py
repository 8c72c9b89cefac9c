"""Isolated fixed points supported on ``d`` distinct 2-torsion points.

Only the reduced configurations (the set S') are enumerated.  Fixed points
with non-reduced support are visible here only as the difference between
``N_0^d`` and ``gamma_d``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .f2 import POINTS
from .kmo import count_components, gamma
from .theta import Config, ConfigError, q_of_config


class Support(str, enum.Enum):
    """Which base-locus set the supporting curve of the image must contain."""

    CONTAINS_6_1 = "contains_6_1"
    CONTAINS_10_1 = "contains_10_1"


@dataclass(frozen=True)
class ConfigSet:
    d: int
    configs: tuple[Config, ...]
    q_values: tuple[int, ...]

    @property
    def split(self) -> tuple[int, int]:
        ones = sum(self.q_values)
        return len(self.q_values) - ones, ones

    def with_q(self, q: int) -> list[Config]:
        return [xi for xi, value in zip(self.configs, self.q_values) if value == q]

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self):
        return iter(self.configs)


_CACHE: dict[int, ConfigSet] = {}


def enumerate_configs(d: int) -> ConfigSet:
    """All ``d``-subsets of A[2] with product 1, tagged with ``q(xi)``."""
    if not isinstance(d, int) or not 1 <= d <= len(POINTS):
        raise ValueError(f"d must be an integer in [1, {len(POINTS)}], got {d!r}")
    if d not in _CACHE:
        configs = sorted(
            Config(combo)
            for combo in combinations(POINTS, d)
            if not _xor(combo)
        )
        _CACHE[d] = ConfigSet(d, tuple(configs), tuple(q_of_config(xi) for xi in configs))
    return _CACHE[d]


def _xor(points) -> int:
    acc = 0
    for p in points:
        acc ^= p.bits
    return acc


def non_reduced_count(d: int) -> int:
    """``#(S \\ S')``: isolated fixed points of K_{d-1}A whose support is not reduced."""
    return count_components(d, 0) - gamma()[d]


def eigenspace_of_support(xi: Config) -> Support:
    """Base-locus set forced into the supporting curve of the image of ``xi``.

    Determined by ``d mod 4`` and ``q(xi)``: for ``d = 1 mod 4``, ``q = 0``
    forces ``6_1`` and ``q = 1`` forces ``10_1``; for ``d = 3 mod 4`` the
    roles swap.
    """
    if not isinstance(xi, Config):
        xi = Config(xi)
    if xi.d % 2 == 0:
        raise ConfigError(f"the eigenspace criterion needs odd d, got d={xi.d}")
    q = q_of_config(xi)
    six = (q == 0) if xi.d % 4 == 1 else (q == 1)
    return Support.CONTAINS_6_1 if six else Support.CONTAINS_10_1
