import pytest

from kummer_theta.f2 import ONE, POINTS, parse_label
from kummer_theta.fixedpoints import enumerate_configs
from kummer_theta.spgroup import (
    deficiency_profile,
    generate_group,
    generators,
    identity_element,
    orbits_on_configs,
    profile_counter,
    q_profile,
    transvection,
)
from kummer_theta.theta import Config, q_of_config


def P(s):
    return parse_label(s)


@pytest.mark.parametrize("u, v, image", [("a", "b'", "ab'"), ("a", "a", "a"), ("a", "a'", "a'")])
def test_transvection_examples(u, v, image):
    assert transvection(P(u))(P(v)) == P(image)


def test_transvections_are_symplectic_involutions():
    ident = identity_element()
    for t in generators():
        assert t @ t == ident
        assert t.is_invertible()
        assert t.preserves_pairing()


def test_identity_matrix():
    assert identity_element().matrix == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_group_order():
    group = generate_group()
    assert len(group) == 720
    assert all(g.preserves_pairing() for g in group)


def test_group_order_r1():
    # Sp(2, F2) = SL(2, F2) has order 6
    assert len(generate_group(1)) == 6


def test_group_fixes_identity_and_is_transitive_on_the_rest():
    group = generate_group()
    assert all(g(ONE) == ONE for g in group)
    assert {g(P("a")) for g in group} == set(POINTS) - {ONE}


def test_orbits_d3():
    report = orbits_on_configs(3)
    assert sorted(report.sizes) == [15, 20]
    assert {o.q_value: o.size for o in report.orbits} == {0: 15, 1: 20}


def test_orbits_d5():
    report = orbits_on_configs(5)
    assert sum(report.sizes) == 273
    assert sorted(report.sizes) == [6, 45, 60, 72, 90]
    by_q = {0: 0, 1: 0}
    for o in report.orbits:
        by_q[o.q_value] += o.size
    assert by_q == {0: 141, 1: 132}


def test_representative_is_least_member():
    for o in orbits_on_configs(5).orbits:
        assert o.representative == min(o.members)


def test_deficiency_profile_is_orbit_invariant():
    for o in orbits_on_configs(5).orbits:
        assert len({deficiency_profile(xi) for xi in o.members}) == 1


def test_d5_examples_lie_in_distinct_orbits():
    report = orbits_on_configs(5)
    reps = {
        report.orbit_of(Config.from_labels(t)).representative
        for t in ("ab',a',c,b,c'", "ab',cb',a',bb',c'", "1,ac',ab',b',c'")
    }
    assert len(reps) == 3


def test_orbit_of_unknown():
    with pytest.raises(KeyError):
        orbits_on_configs(3).orbit_of(Config.from_labels("a,b,c,1"))


def test_q_profile_and_counter():
    xi = Config.from_labels("a,a',aa'")
    prof = q_profile(xi)
    assert len(prof) == 16
    assert all(n % 2 == q_of_config(xi) for n in prof)
    assert sum(profile_counter(prof).values()) == 16


def test_action_preserves_q():
    group = sorted(generate_group(), key=lambda g: g.images)[:40]
    for xi in enumerate_configs(3):
        for g in group:
            assert q_of_config(g.act(xi)) == q_of_config(xi)


def test_non_symplectic_map_detected():
    # swapping a and b alone is invertible but breaks <a, b'> = 1
    from kummer_theta.spgroup import SpElement

    swap = SpElement((0b0100, 0b1000, 0b0010, 0b0001))
    assert swap.is_invertible()
    assert not swap.preserves_pairing()
