"""Recompute every tabulated value and compare.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in a
fixed order so the report is byte-for-byte reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import tables
from .f2 import ONE, POINTS, parse_label, parse_points
from .fixedpoints import Support, enumerate_configs, eigenspace_of_support
from .hudson import TABLE, Divisor, bx_point, divisor_centers, divisor_of, incidence_166, shares_line
from .kmo import (
    component_counts,
    dimension_bounds,
    gamma_bruteforce,
    gamma_generating_function,
    isolated_count_bound,
)
from .spgroup import generate_group, orbits_on_configs, q_profile
from .star import certified_points, star_profile
from .theta import Config, q_of_config, q_one, six_set, ten_set


@dataclass
class CheckResult:
    name: str
    failures: list[str] = field(default_factory=list)
    summary: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, message: str) -> None:
        if not condition:
            self.failures.append(message)


def check_gamma() -> CheckResult:
    res = CheckResult("gamma reproduction (r=4)")
    gf = gamma_generating_function(4).counts
    brute = gamma_bruteforce(4).counts
    res.expect(gf == tables.GAMMA_R4, f"generating function gave {gf}")
    res.expect(brute == tables.GAMMA_R4, f"brute force gave {brute}")
    res.summary = " ".join(map(str, gf))
    return res


def check_oracle() -> CheckResult:
    res = CheckResult("generating function = brute force, r=1..4")
    for r in range(1, 5):
        gf = gamma_generating_function(r).counts
        brute = gamma_bruteforce(r).counts
        res.expect(gf == brute, f"r={r}: {gf} != {brute}")
        res.expect(sum(gf) == 2 ** (2**r - r), f"r={r}: total {sum(gf)}")
    res.summary = "r=1..4 agree"
    return res


def check_components() -> CheckResult:
    res = CheckResult("component counts N_m^{n+1}, n=1..10")
    for n, expected in sorted(tables.COMPONENTS.items()):
        table = component_counts(n)
        got = [table[m] for m in range(len(expected))]
        res.expect(got == expected, f"n={n}: {got} != {expected}")
        low, high = dimension_bounds(n)
        res.expect((low, high) == (0, len(expected) - 1), f"n={n}: bounds {(low, high)}")
    bound = isolated_count_bound()
    res.expect(bound == tables.ISOLATED_BOUND, f"isolated bound {bound}")
    res.summary = f"isolated points up to n={bound}"
    return res


def check_census() -> CheckResult:
    res = CheckResult("fixed-point census and q-split, odd d=3..13")
    gammas = tables.GAMMA_R4
    for d, split in sorted(tables.Q_SPLIT.items()):
        cs = enumerate_configs(d)
        res.expect(len(cs) == gammas[d], f"d={d}: {len(cs)} configs")
        res.expect(cs.split == split, f"d={d}: split {cs.split} != {split}")
    res.summary = " ".join(f"{d}:{s[0]}/{s[1]}" for d, s in sorted(tables.Q_SPLIT.items()))
    return res


def check_hudson() -> CheckResult:
    res = CheckResult("Hudson table and (16,6) incidence")
    grid = tuple(tuple(str(u) for u in row) for row in TABLE.grid)
    res.expect(grid == tables.HUDSON_GRID, f"grid {grid}")
    for i, u in enumerate(POINTS):
        for v in POINTS[i + 1:]:
            res.expect(shares_line(u, v) == (q_one(u * v) == 1), f"lines disagree at {u},{v}")
    six_one = six_set(ONE)
    res.expect(six_one == set(parse_points(",".join(tables.SIX_ONE))), "6_1 differs")
    for v in POINTS:
        res.expect({v * u for u in six_set(v)} == six_one, f"v 6_v != 6_1 for v={v}")
        res.expect({v * u for u in ten_set(v)} == ten_set(ONE), f"v 10_v != 10_1 for v={v}")
    m = incidence_166()
    res.expect(all(sum(row) == 6 for row in m), "row sums")
    res.expect(all(sum(col) == 6 for col in zip(*m)), "column sums")
    res.expect(all(m[i][j] == m[j][i] for i in range(16) for j in range(16)), "asymmetric")
    res.summary = "grid, 120 pairs, 16 translates, incidence"
    return res


def check_d3_classification() -> CheckResult:
    res = CheckResult("d=3 deficiency classification")
    six_one, ten_one = six_set(ONE), ten_set(ONE)
    for xi in enumerate_configs(3):
        defs = {x: star_profile(xi, x).deficiency for x in POINTS}
        if q_of_config(xi) == 1:
            twos = [x for x, k in defs.items() if k == 2]
            res.expect(len(twos) == 1, f"{xi}: deficiency-2 points {twos}")
            if len(twos) == 1:
                res.expect(twos[0] in ten_one, f"{xi}: {twos[0]} not in 10_1")
                res.expect(twos[0] == bx_point(xi), f"{xi}: {twos[0]} != B_x point")
            res.expect(all(defs[x] == 1 for x in six_one), f"{xi}: 6_1 not all 1")
            res.expect(
                all(defs[x] == 0 for x in ten_one if x not in twos), f"{xi}: stray 10_1 points"
            )
        else:
            res.expect(all(defs[x] == 1 for x in ten_one), f"{xi}: 10_1 not all 1")
            res.expect(all(defs[x] == 0 for x in six_one), f"{xi}: 6_1 not all 0")
    res.summary = "20 nodal, 15 on C"
    return res


def check_correspondence() -> CheckResult:
    res = CheckResult("d=3 triple/divisor correspondence")
    expected = {}
    for rows in (tables.CORRESPONDENCE_Q0, tables.CORRESPONDENCE_Q1):
        for xi_text, div_text in rows:
            expected[Config.from_labels(xi_text)] = Divisor.parse(div_text)
    configs = enumerate_configs(3).configs
    res.expect(set(expected) == set(configs), "table does not list every triple once")
    for xi in configs:
        got = divisor_of(xi)
        res.expect(expected.get(xi) == got, f"{xi}: {got} != {expected.get(xi)}")
        if q_of_config(xi) == 0:
            # every valid z is itself a point of the divisor, so there are always four
            centers = divisor_centers(xi)
            res.expect(set(centers) == set(got.parts), f"{xi}: centers {centers}")
    printed = Config.from_labels(tables.PRINTED_ROW[0])
    res.expect(q_of_config(printed) == 0, "anomalous reference row unexpectedly has q=1")
    res.summary = "35 rows; reference row (ba',cc',ab') replaced by (ab',bc',ca')"
    return res


def check_d5_examples() -> CheckResult:
    res = CheckResult("d=5 singular points")
    for xi_text, q, support, singular in tables.D5_EXAMPLES:
        xi = Config.from_labels(xi_text)
        cp = certified_points(xi)
        res.expect(q_of_config(xi) == q, f"{xi}: q={q_of_config(xi)}")
        res.expect(eigenspace_of_support(xi) == Support(support), f"{xi}: support")
        want = frozenset(parse_label(s) for s in singular)
        res.expect(cp.singular == want, f"{xi}: singular {sorted(map(str, cp.singular))}")
    res.summary = "{ba'}, {b,b'}, {b',c'}"
    return res


def check_group() -> CheckResult:
    res = CheckResult("Sp(A[2]) and its orbits")
    group = generate_group()
    res.expect(len(group) == tables.SP_ORDER, f"order {len(group)}")
    res.expect(all(g.preserves_pairing() for g in group), "pairing not preserved")
    d3 = orbits_on_configs(3)
    res.expect(
        sorted((o.size, o.q_value) for o in d3.orbits) == [(15, 0), (20, 1)],
        f"d=3 orbits {[(o.size, o.q_value) for o in d3.orbits]}",
    )
    d5 = orbits_on_configs(5)
    res.expect(len(d5.orbits) >= 3, f"d=5 has {len(d5.orbits)} orbits")
    ex2, ex3 = (Config.from_labels(t[0]) for t in tables.D5_EXAMPLES[1:])
    res.expect(d5.orbit_of(ex2) is not d5.orbit_of(ex3), "examples share an orbit")
    res.expect(q_profile(ex2) != q_profile(ex3), "profiles do not separate the examples")
    for d in range(1, 16, 2):
        for orbit in orbits_on_configs(d).orbits:
            res.expect(
                all(q_of_config(xi) == orbit.q_value for xi in orbit.members), f"d={d}: q varies"
            )
            res.expect(
                all(q_profile(xi) == orbit.profile for xi in orbit.members),
                f"d={d}: profile varies",
            )
    res.summary = f"|Sp|={len(group)}, d=5 orbits: {len(d5.orbits)}"
    return res


def check_parity() -> CheckResult:
    res = CheckResult("odd kernel bound on the forced support set")
    six_one, ten_one = six_set(ONE), ten_set(ONE)
    checked = 0
    for d in range(1, 16, 2):
        for xi in enumerate_configs(d):
            forced = six_one if eigenspace_of_support(xi) is Support.CONTAINS_6_1 else ten_one
            for x in forced:
                checked += 1
                k = star_profile(xi, x).deficiency
                res.expect(k % 2 == 1, f"{xi}, x={x}: deficiency {k}")
    res.summary = f"{checked} (xi, x) pairs"
    return res


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_gamma,
    check_oracle,
    check_components,
    check_census,
    check_hudson,
    check_d3_classification,
    check_correspondence,
    check_d5_examples,
    check_group,
    check_parity,
)


def run_all() -> list[CheckResult]:
    return [check() for check in CHECKS]
