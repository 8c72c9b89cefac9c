"""Sp(A[2]) generated by transvections, and its orbits on configurations."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .f2 import POINTS, TorsionPoint, all_points, pairing
from .fixedpoints import enumerate_configs
from .star import certified_points
from .theta import Config, q_of_config, theta


@dataclass(frozen=True)
class SpElement:
    """Linear map of F2^{2r} stored as the images of the basis vectors.

    ``images[i]`` is the image of the basis vector at big-endian position
    ``i``, so ``images[0]`` is the image of ``a`` when ``r = 2``.
    """

    images: tuple[int, ...]
    r: int = 2

    def __call__(self, u: TorsionPoint) -> TorsionPoint:
        if u.r != self.r:
            raise ValueError("points live in spaces of different rank")
        return self._table[u.bits]

    @cached_property
    def _table(self) -> tuple[TorsionPoint, ...]:
        n = 2 * self.r
        out = []
        for bits in range(1 << n):
            image = 0
            for i in range(n):
                if (bits >> (n - 1 - i)) & 1:
                    image ^= self.images[i]
            out.append(TorsionPoint(image, self.r))
        return tuple(out)

    def __matmul__(self, other: SpElement) -> SpElement:
        """Composition: ``(S @ T)(u) == S(T(u))``."""
        return SpElement(tuple(self(TorsionPoint(b, self.r)).bits for b in other.images), self.r)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Bit matrix acting on column coordinate vectors."""
        n = 2 * self.r
        cols = [TorsionPoint(b, self.r).coords for b in self.images]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def is_invertible(self) -> bool:
        return len({self(u) for u in all_points(self.r)}) == 1 << (2 * self.r)

    def preserves_pairing(self) -> bool:
        # the map is linear, so checking the basis suffices
        n = 2 * self.r
        basis = [TorsionPoint(1 << (n - 1 - i), self.r) for i in range(n)]
        return all(pairing(self(u), self(v)) == pairing(u, v) for u in basis for v in basis)

    def act(self, xi: Config) -> Config:
        return Config(self(u) for u in xi)


def identity_element(r: int = 2) -> SpElement:
    n = 2 * r
    return SpElement(tuple(1 << (n - 1 - i) for i in range(n)), r)


def transvection(u: TorsionPoint) -> SpElement:
    """``T_u(v) = v + <v, u> u``."""
    n = 2 * u.r
    basis = [TorsionPoint(1 << (n - 1 - i), u.r) for i in range(n)]
    return SpElement(tuple((e * u).bits if pairing(e, u) else e.bits for e in basis), u.r)


def generators(r: int = 2) -> list[SpElement]:
    """The nontrivial transvections."""
    return [transvection(u) for u in all_points(r) if not u.is_identity]


@lru_cache(maxsize=None)
def generate_group(r: int = 2) -> frozenset[SpElement]:
    """Closure of the transvections under composition."""
    gens = generators(r)
    start = identity_element(r)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for t in gens:
            h = t @ g
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return frozenset(seen)


def q_profile(xi: Config) -> tuple[int, ...]:
    """Sorted multiset of ``#{u in xi : q_v(u) = 1}`` over all ``v``."""
    return tuple(sorted(sum(theta(v)(u) for u in xi) for v in POINTS))


def deficiency_profile(xi: Config) -> tuple[int, ...]:
    return tuple(sorted(p.deficiency for p in certified_points(xi).profiles))


@dataclass(frozen=True)
class Orbit:
    representative: Config
    members: tuple[Config, ...]
    q_value: int
    profile: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitReport:
    d: int
    orbits: tuple[Orbit, ...]

    def orbit_of(self, xi: Config) -> Orbit:
        for orbit in self.orbits:
            if xi in orbit.members:
                return orbit
        raise KeyError(f"{xi} is not a configuration with d={self.d}")

    @property
    def sizes(self) -> list[int]:
        return [o.size for o in self.orbits]


def orbits_on_configs(d: int) -> OrbitReport:
    """Partition the zero-sum ``d``-subsets into Sp(A[2])-orbits.

    Orbits are found by breadth-first search along the transvections and
    listed by their least member.  ``q`` and the profile are recomputed on
    every member and must be constant on each orbit.
    """
    configs = enumerate_configs(d).configs
    gens = generators()
    unseen = set(configs)
    orbits = []
    for start in configs:
        if start not in unseen:
            continue
        unseen.discard(start)
        members = [start]
        queue = deque([start])
        while queue:
            xi = queue.popleft()
            for t in gens:
                image = t.act(xi)
                if image in unseen:
                    unseen.discard(image)
                    members.append(image)
                    queue.append(image)
        members.sort()
        q_values = {q_of_config(xi) for xi in members}
        profiles = {q_profile(xi) for xi in members}
        assert len(q_values) == 1 and len(profiles) == 1, (start, q_values, profiles)
        orbits.append(Orbit(members[0], tuple(members), q_values.pop(), profiles.pop()))
    return OrbitReport(d, tuple(orbits))


def profile_counter(profile: tuple[int, ...]) -> dict[int, int]:
    return dict(sorted(Counter(profile).items()))
