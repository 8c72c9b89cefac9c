from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from kummer_theta.kmo import (
    CapacityError,
    IntPolynomial,
    binomial,
    component_counts,
    count_components,
    dimension_bounds,
    gamma_bruteforce,
    gamma_generating_function,
    gamma_polynomial,
    isolated_count_bound,
)

TABLE_1 = (1, 1, 0, 35, 140, 273, 448, 715, 870, 715, 448, 273, 140, 35, 0, 1, 1)


def zero_sum_subsets(r):
    """Independent oracle: list every zero-sum subset of F2^r via itertools."""
    elements = range(2 ** r)
    out = []
    for k in range(2 ** r + 1):
        for combo in combinations(elements, k):
            acc = 0
            for e in combo:
                acc ^= e
            if acc == 0:
                out.append(combo)
    return out


def test_binomial_conventions():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(5, Fraction(3, 2)) == 0
    assert binomial(0, 0) == 1
    assert binomial(4, Fraction(4, 2)) == 6


class TestIntPolynomial:
    def test_trims(self):
        assert IntPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
        assert IntPolynomial([0, 0]).coefficients == ()

    def test_arithmetic(self):
        x = IntPolynomial([0, 1])
        assert (x + 1) ** 2 == IntPolynomial([1, 2, 1])
        assert (x + 1) * (x - 1) == IntPolynomial([-1, 0, 1])
        assert 3 - x == IntPolynomial([3, -1])
        assert (x ** 0) == IntPolynomial([1])

    def test_big_integers(self):
        x = IntPolynomial([0, 1])
        p = (x + 1) ** 200
        assert p[100] == binomial(200, 100)
        assert p[100] > 2 ** 64

    def test_str(self):
        assert str(IntPolynomial([1, -1, 0, 2])) == "2x^3 - x + 1"
        assert str(IntPolynomial()) == "0"


@pytest.mark.parametrize("r", [1, 2, 3])
def test_bruteforce_matches_itertools_oracle(r):
    subsets = zero_sum_subsets(r)
    counts = [0] * (2 ** r + 1)
    for s in subsets:
        counts[len(s)] += 1
    assert gamma_bruteforce(r).counts == tuple(counts)


def test_bruteforce_r2():
    assert gamma_bruteforce(2).counts == (1, 1, 0, 1, 1)


def test_table_1():
    assert gamma_bruteforce(4).counts == TABLE_1
    assert gamma_generating_function(4).counts == TABLE_1


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_generating_function_equals_bruteforce(r):
    assert gamma_generating_function(r).counts == gamma_bruteforce(r).counts


def test_r4_expansion():
    poly = gamma_polynomial(4)
    assert poly[8] == 870
    assert poly[14] == 0
    assert poly.degree == 16
    assert str(poly) == (
        "x^16 + x^15 + 35x^13 + 140x^12 + 273x^11 + 448x^10 + 715x^9 + 870x^8"
        " + 715x^7 + 448x^6 + 273x^5 + 140x^4 + 35x^3 + x + 1"
    )


def test_r2_polynomial():
    assert gamma_polynomial(2) == IntPolynomial([1, 1, 0, 1, 1])


@pytest.mark.parametrize("r", range(1, 9))
def test_gamma_invariants(r):
    g = gamma_generating_function(r).counts
    size = 2 ** r
    assert len(g) == size + 1
    assert g[0] == 1 and g[1] == 1
    if r >= 2:
        # complement symmetry needs the whole group to sum to zero
        assert all(g[i] == g[size - i] for i in range(size + 1))
    assert sum(g) == 2 ** (size - r)
    assert all(c >= 0 for c in g)


def test_bruteforce_capacity():
    with pytest.raises(CapacityError):
        gamma_bruteforce(5)
    with pytest.raises(ValueError):
        gamma_bruteforce(0)


def test_component_counts_against_subset_formula():
    # sum the binomial over the zero-sum subsets themselves, with no gamma vector in between
    subsets = zero_sum_subsets(4)
    assert len(subsets) == 4096

    def oracle(n, m):
        total = 0
        for s in subsets:
            twice = n - len(s) - 2 * m
            if twice % 2 == 0 and 0 <= twice // 2 <= len(s):
                total += comb(len(s), twice // 2)
        return total

    for n in (1, 2, 4, 5, 8, 11):
        for m in range(0, n // 2 + 2):
            assert count_components(n, m) == oracle(n, m), (n, m)


TABLE_2 = {
    1: [0, 1],
    3: [140, 0, 1],
    5: [1008, 140, 0, 1],
    7: [4398, 1008, 140, 0, 1],
    9: [14688, 4398, 1008, 140, 0, 1],
}
TABLE_3 = {
    2: [36, 1],
    4: [378, 36, 1],
    6: [2185, 378, 36, 1],
    8: [8485, 2185, 378, 36, 1],
    10: [24453, 8485, 2185, 378, 36, 1],
}


@pytest.mark.parametrize("n, row", sorted({**TABLE_2, **TABLE_3}.items()))
def test_component_tables(n, row):
    table = component_counts(n)
    assert [m for m, _ in table.entries] == list(range(len(row)))
    assert [c for _, c in table.entries] == row


def test_dimension_bounds_for_large_n():
    assert dimension_bounds(99) == (50 - 24, 50)
    assert dimension_bounds(100) == (50 - 22, 50)
    for n in (60, 61, 99, 100):
        low, high = dimension_bounds(n)
        assert count_components(n + 1, low) > 0
        assert count_components(n + 1, low - 1) == 0
        assert count_components(n + 1, high + 1) == 0


def test_isolated_bound():
    assert isolated_count_bound() == 47
    assert count_components(48, 0) > 0
    assert count_components(49, 0) == 0
    assert count_components(4, 0) == 140


def test_component_counts_rejects_bad_n():
    with pytest.raises(ValueError):
        component_counts(0)
