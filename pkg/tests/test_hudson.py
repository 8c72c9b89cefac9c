from itertools import combinations

import pytest

from kummer_theta.f2 import ONE, POINTS, parse_label, parse_points
from kummer_theta.fixedpoints import enumerate_configs
from kummer_theta.hudson import (
    TABLE,
    Divisor,
    build_table,
    bx_point,
    curve_of,
    divisor_centers,
    divisor_of,
    incidence_166,
    shares_line,
)
from kummer_theta.theta import Config, ConfigError, q_one, six_set, ten_set

GRID = [
    ["1", "ab'", "bc'", "ca'"],
    ["ac'", "a'", "c", "bb'"],
    ["ba'", "cc'", "b'", "a"],
    ["cb'", "b", "aa'", "c'"],
]


def P(s):
    return parse_label(s)


def X(text):
    return Config.from_labels(text)


def test_grid_matches_reference():
    assert [[str(u) for u in row] for row in build_table().grid] == GRID


@pytest.mark.parametrize("i, j, label", [(1, 1, "1"), (2, 3, "c"), (3, 2, "cc'")])
def test_entries(i, j, label):
    assert TABLE.entry(i, j) == P(label)


def test_every_point_once():
    flat = [u for row in TABLE.grid for u in row]
    assert sorted(flat) == sorted(POINTS)


def test_is_multiplication_table():
    for i in range(1, 5):
        for j in range(1, 5):
            assert TABLE.entry(i, j) == TABLE.entry(i, 1) * TABLE.entry(1, j)


@pytest.mark.parametrize(
    "u, v, expected", [("1", "ab'", True), ("a'", "b'", False), ("b'", "aa'", True)]
)
def test_shares_line(u, v, expected):
    assert shares_line(P(u), P(v)) is expected


def test_shares_line_rejects_equal_points():
    with pytest.raises(ValueError):
        shares_line(P("a"), P("a"))


def test_lines_are_q_one_of_product():
    pairs = list(combinations(POINTS, 2))
    assert len(pairs) == 120
    for u, v in pairs:
        assert shares_line(u, v) == (q_one(u * v) == 1)


def test_incidence_matrix():
    m = incidence_166()
    assert all(sum(row) == 6 for row in m)
    assert all(sum(col) == 6 for col in zip(*m))
    assert m == [list(col) for col in zip(*m)]
    row_one = {u for u, bit in zip(POINTS, m[POINTS.index(ONE)]) if bit}
    assert row_one == set(parse_points("ac',ba',cb',ab',bc',ca'"))


@pytest.mark.parametrize(
    "xi, x",
    [("ab',bc',ca'", "1"), ("c',bb',ba'", "a"), ("ba',bb',c'", "a")],
)
def test_bx_point(xi, x):
    assert bx_point(X(xi)) == P(x)


def test_bx_point_rejects_bad_input():
    with pytest.raises(ConfigError):
        bx_point(X("a,a',aa'"))
    with pytest.raises(ConfigError):
        bx_point(X("ab',a',c,b,c'"))
    with pytest.raises(ConfigError):
        bx_point([P("a"), P("b"), P("a")])


def test_bx_point_always_in_ten_one():
    for xi in enumerate_configs(3).with_q(1):
        assert bx_point(xi) in ten_set(ONE)


@pytest.mark.parametrize(
    "xi, divisor",
    [
        ("a,a',aa'", "1+a+a'+aa'"),
        ("c',ca',cb'", "a'+b'+c+cc'"),
        ("b',bc',ba'", "a'+b+c'+bb'"),
        ("ab',bc',ca'", "1+ab'+bc'+ca'"),
        ("ac',ba',cb'", "1+ac'+ba'+cb'"),
    ],
)
def test_divisor_of(xi, divisor):
    assert divisor_of(X(xi)) == Divisor.parse(divisor)


def test_divisor_centers_example():
    # four valid z for (b', bc', ba'); they all give the same divisor
    assert set(divisor_centers(X("b',bc',ba'"))) == set(parse_points("a',bb',b,c'"))


def test_q0_centers_are_the_divisor_support():
    # every q = 0 triple has four centers, z = u being one of them whenever u lies in 10_1
    for xi in enumerate_configs(3).with_q(0):
        centers = divisor_centers(xi)
        assert len(centers) == 4
        assert set(centers) == set(divisor_of(xi).parts)


def test_q0_triple_shapes():
    # six triples lie in 10_1 in distinct rows and columns, nine have one point in 10_1
    shapes = []
    for xi in enumerate_configs(3).with_q(0):
        shapes.append(sum(u in ten_set(ONE) for u in xi))
    assert sorted(shapes) == [1] * 9 + [3] * 6
    for xi in enumerate_configs(3).with_q(0):
        if all(u in ten_set(ONE) for u in xi):
            rows = {TABLE.position(u)[0] for u in xi}
            cols = {TABLE.position(u)[1] for u in xi}
            assert len(rows) == len(cols) == 3
            assert ONE in divisor_centers(xi)


def test_q1_triple_shapes():
    in_six = sorted(sum(u in six_set(ONE) for u in xi) for xi in enumerate_configs(3).with_q(1))
    assert in_six == [1] * 18 + [3] * 2


def test_curve_names():
    assert curve_of(X("a,a',aa'")) == "C"
    assert curve_of(X("c',bb',ba'")) == "B_a"


def test_divisor_str_and_parse():
    d = Divisor.parse("ca'+1+ab'+bc'")
    assert str(d) == "1+ab'+bc'+ca'"
    assert d.multiset[P("1")] == 1


def test_render_contains_every_label():
    text = TABLE.render()
    for row in GRID:
        for label in row:
            assert label in text
    marked = TABLE.render({P("a"): "*"})
    assert marked.count("*") == 1
