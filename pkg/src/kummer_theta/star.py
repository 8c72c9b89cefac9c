"""Eigenvalue bookkeeping for the restriction map of sections to ``xi``.

For a configuration ``xi`` of ``d`` distinct 2-torsion points and a twist
``x`` (identified with the theta characteristic ``q_x``), ``[-1]`` acts on
the ``d``-dimensional domain with multiplicities fixed by the parity of
``q_x`` and on the ``d``-dimensional codomain with one eigenvalue
``(-1)^{q_x(u)}`` per point ``u``.  An equivariant map cannot be injective
on the +1 part when the +1 multiplicities differ, so

    deficiency = |m_dom_plus - m_cod_plus|

is a lower bound on the kernel dimension.  Deficiency 1 certifies ``x`` on
the supporting curve; deficiency 2 or more certifies a singular point.
Deficiency 0 certifies nothing.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .f2 import POINTS, TorsionPoint
from .theta import Config, ConfigError, Parity, theta


class Verdict(str, enum.Enum):
    NOT_CERTIFIED = "not_certified"
    ON_CURVE = "on_curve"
    SINGULAR_ON_CURVE = "singular_on_curve"


@dataclass(frozen=True)
class StarProfile:
    xi: Config
    x: TorsionPoint
    m_dom_plus: int
    m_dom_minus: int
    m_cod_plus: int
    m_cod_minus: int

    @property
    def deficiency(self) -> int:
        return abs(self.m_dom_plus - self.m_cod_plus)

    @property
    def verdict(self) -> Verdict:
        if self.deficiency == 0:
            return Verdict.NOT_CERTIFIED
        if self.deficiency == 1:
            return Verdict.ON_CURVE
        return Verdict.SINGULAR_ON_CURVE


def _odd_config(xi) -> Config:
    if not isinstance(xi, Config):
        xi = Config(xi)
    if xi.d % 2 == 0:
        raise ConfigError(f"the eigenvalue criterion needs odd d, got d={xi.d}")
    return xi


def star_profile(xi: Config, x: TorsionPoint) -> StarProfile:
    xi = _odd_config(xi)
    d = xi.d
    q = theta(x)
    big, small = (d + 1) // 2, (d - 1) // 2
    dom_plus, dom_minus = (big, small) if q.parity is Parity.EVEN else (small, big)
    cod_minus = sum(q(u) for u in xi)
    return StarProfile(xi, x, dom_plus, dom_minus, d - cod_minus, cod_minus)


@dataclass(frozen=True)
class CertifiedPoints:
    xi: Config
    profiles: tuple[StarProfile, ...]

    @property
    def on_curve(self) -> frozenset[TorsionPoint]:
        return frozenset(p.x for p in self.profiles if p.deficiency >= 1)

    @property
    def singular(self) -> frozenset[TorsionPoint]:
        return frozenset(p.x for p in self.profiles if p.deficiency >= 2)

    @property
    def undetermined(self) -> frozenset[TorsionPoint]:
        return frozenset(p.x for p in self.profiles if p.deficiency == 0)


def certified_points(xi: Config) -> CertifiedPoints:
    """Run :func:`star_profile` over every ``x`` in A[2]."""
    xi = _odd_config(xi)
    return CertifiedPoints(xi, tuple(star_profile(xi, x) for x in POINTS))
