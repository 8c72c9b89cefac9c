"""Zero-sum subset counts of F2^r and the KMO component counts.

``gamma[i]`` is the number of ``i``-element subsets of F2^r whose elements
sum to zero.  For ``r = 4`` these feed the Kamenova-Mongardi-Oblomkov count

    N_m^n = sum_i gamma[i] * binom(i, (n - i)/2 - m)

of ``2m``-dimensional components in the fixed locus of a symplectic
involution on a ``2(n-1)``-dimensional variety of Kummer type.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

MAX_BRUTEFORCE_RANK = 4
KUMMER_RANK = 4


class CapacityError(ValueError):
    """Requested computation is too large for exhaustive enumeration."""


def binomial(n: int, k) -> int:
    """``C(n, k)``, taken to be 0 when ``k`` is negative, exceeds ``n``, or is not an integer."""
    k = Fraction(k)
    if k.denominator != 1:
        return 0
    k = int(k)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial; ``coefficients[i]`` multiplies ``x^i``."""

    coefficients: tuple[int, ...] = ()

    def __init__(self, coefficients: Sequence[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __add__(self, other) -> IntPolynomial:
        other = _poly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other) -> IntPolynomial:
        return self + (-_poly(other))

    def __rsub__(self, other) -> IntPolynomial:
        return _poly(other) - self

    def __mul__(self, other) -> IntPolynomial:
        other = _poly(other)
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = IntPolynomial([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        return text + "".join(f" {s} {b}" for s, b in terms[1:])


def _poly(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial([value])
    raise TypeError(f"cannot treat {value!r} as an integer polynomial")


X = IntPolynomial([0, 1])


@dataclass(frozen=True)
class GammaVector:
    r: int
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def _check_gamma_rank(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"rank r must be a positive integer, got {r!r}")


def gamma_bruteforce(r: int) -> GammaVector:
    """Count zero-sum subsets of F2^r by scanning all ``2^(2^r)`` subsets."""
    _check_gamma_rank(r)
    if r > MAX_BRUTEFORCE_RANK:
        raise CapacityError(
            f"brute force scans 2^(2^r) subsets; r={r} exceeds the limit "
            f"r<={MAX_BRUTEFORCE_RANK}"
        )
    size = 1 << r
    n_subsets = 1 << size
    # xor_sum[mask] = XOR of the elements in mask, built from mask minus its lowest bit
    xor_sum = [0] * n_subsets
    popcount = [0] * n_subsets
    counts = [0] * (size + 1)
    counts[0] = 1
    for mask in range(1, n_subsets):
        low = mask & -mask
        rest = mask ^ low
        xor_sum[mask] = xor_sum[rest] ^ (low.bit_length() - 1)
        popcount[mask] = popcount[rest] + 1
        if xor_sum[mask] == 0:
            counts[popcount[mask]] += 1
    return GammaVector(r, tuple(counts))


def _even_part_of_binomial_power(n: int) -> IntPolynomial:
    """``sum_i C(n, 2i) x^(2i)``."""
    return IntPolynomial([binomial(n, k) if k % 2 == 0 else 0 for k in range(n + 1)])


def gamma_polynomial(r: int) -> IntPolynomial:
    """Generating function of zero-sum subsets of F2^r, by subset size (Song)."""
    _check_gamma_rank(r)
    half = 1 << (r - 1)
    product = IntPolynomial([1])
    for k in range(r - 1):
        product = product * _even_part_of_binomial_power(1 << k)
    inner = _even_part_of_binomial_power(half) - (half - 1) * X * product
    return (X + 1) ** half * inner


def gamma_generating_function(r: int) -> GammaVector:
    poly = gamma_polynomial(r)
    return GammaVector(r, tuple(poly[i] for i in range((1 << r) + 1)))


_GAMMA_CACHE: dict[int, GammaVector] = {}


def gamma(r: int = KUMMER_RANK) -> GammaVector:
    if r not in _GAMMA_CACHE:
        _GAMMA_CACHE[r] = gamma_generating_function(r)
    return _GAMMA_CACHE[r]


def count_components(n: int, m: int, gammas: Sequence[int] | None = None) -> int:
    """``N_m^n``: note ``n`` here is the number of points, one more than the Kummer index."""
    g = gamma() if gammas is None else gammas
    return sum(g[i] * binomial(i, Fraction(n - i, 2) - m) for i in range(len(g)))


def dimension_bounds(n: int, r: int = KUMMER_RANK) -> tuple[int, int]:
    """Range of ``m`` for which ``N_m^{n+1}`` can be nonzero on a ``2n``-fold.

    Only subsets of the parity of ``n + 1`` contribute, and the largest such
    subset has ``2^r`` or ``2^r - 1`` points; these give
    ``max(0, ceil(n/2) - 24) <= m <= ceil(n/2)`` and ``... - 22`` for
    odd and even ``n`` when ``r = 4``.
    """
    top = -(-n // 2)
    size = 1 << r
    largest = size if (n + 1) % 2 == 0 else size - 1
    # C(i, (n+1-i)/2 - m) needs (n+1-i)/2 - m <= i, i.e. m >= (n+1-3i)/2
    low = max(0, math.ceil(Fraction(n + 1 - 3 * largest, 2)))
    return low, top


@dataclass(frozen=True)
class ComponentTable:
    """Counts ``N_m^{n+1}`` for the fixed locus on a ``2n``-dimensional variety."""

    n: int
    entries: tuple[tuple[int, int], ...] = field(default=())

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, m: int) -> int:
        return self.as_dict().get(m, 0)


def component_counts(n: int) -> ComponentTable:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    low, high = dimension_bounds(n)
    entries = tuple((m, count_components(n + 1, m)) for m in range(low, high + 1))
    return ComponentTable(n, entries)


def isolated_count_bound() -> int:
    """Largest ``n`` for which a ``2n``-fold's fixed locus has isolated points."""
    size = len(gamma()) - 1
    # beyond n + 1 = 3 * 2^r every binomial in N_0^{n+1} vanishes
    limit = 3 * size
    nonzero = [n for n in range(1, limit + 1) if count_components(n + 1, 0) > 0]
    return max(nonzero)
