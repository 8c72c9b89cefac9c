"""Command-line interface: ``kummer-theta <command> [--format text|csv|json]``.

CSV columns per command:

  gamma           i,gamma              (method both: i,gf,brute)
  components      n,m,count            (--only-isolated: n,count)
  enumerate       xi,q
  classify        x,parity,m_dom_plus,m_dom_minus,m_cod_plus,m_cod_minus,deficiency,verdict
  orbits          representative,size,q,profile
  hudson          row,col,point
  correspondence  xi,q,curve,divisor,centers,note
  verify          check,status,summary
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .f2 import LabelError, parse_points
from .fixedpoints import enumerate_configs, eigenspace_of_support, non_reduced_count
from .hudson import TABLE, curve_of, divisor_centers, divisor_of
from .kmo import (
    CapacityError,
    component_counts,
    count_components,
    gamma_bruteforce,
    gamma_generating_function,
    gamma_polynomial,
)
from .spgroup import orbits_on_configs, profile_counter
from .star import certified_points
from .theta import Config, ConfigError, q_of_config, theta
from . import tables, verify


class CommandError(Exception):
    """User-facing failure; the message is printed and the exit status is 1."""


@dataclass
class Output:
    """What a command produces, renderable in each format."""

    payload: dict
    header: list[str]
    rows: list[list] = field(default_factory=list)
    text: str = ""
    ok: bool = True

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return self.text.rstrip("\n") + "\n"


def _labels(points) -> list[str]:
    return [str(p) for p in sorted(points)]


def _set_text(points) -> str:
    return "{" + ", ".join(_labels(points)) + "}"


def _parse_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = (int(s) for s in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise CommandError(f"--n expects an integer or a range like 1-10, got {text!r}")
    if lo < 1 or hi < lo:
        raise CommandError(f"--n range must satisfy 1 <= start <= end, got {text!r}")
    return list(range(lo, hi + 1))


def cmd_gamma(args) -> Output:
    r, method = args.r, args.method
    results = {}
    if method in ("gf", "both"):
        results["gf"] = list(gamma_generating_function(r).counts)
    if method in ("brute", "both"):
        results["brute"] = list(gamma_bruteforce(r).counts)
    payload = {"r": r, "method": method}
    if method == "both":
        match = results["gf"] == results["brute"]
        payload.update(gf=results["gf"], brute=results["brute"], match=match)
        rows = [[i, g, b] for i, (g, b) in enumerate(zip(results["gf"], results["brute"]))]
        text = (
            f"gf:    {' '.join(map(str, results['gf']))}\n"
            f"brute: {' '.join(map(str, results['brute']))}\n"
            f"{'match' if match else 'MISMATCH'}"
        )
        return Output(payload, ["i", "gf", "brute"], rows, text, ok=match)
    counts = results[method]
    payload["gamma"] = counts
    lines = [f"gamma_{i} = {c}" for i, c in enumerate(counts)]
    if method == "gf":
        lines.append(f"generating function: {gamma_polynomial(r)}")
    return Output(payload, ["i", "gamma"], [[i, c] for i, c in enumerate(counts)], "\n".join(lines))


def cmd_components(args) -> Output:
    ns = _parse_range(args.n)
    if args.only_isolated:
        counts = [(n, count_components(n + 1, 0)) for n in ns]
        payload = {"rows": [{"n": n, "isolated": c} for n, c in counts]}
        text = "\n".join(f"n={n}: {c}" for n, c in counts)
        return Output(payload, ["n", "count"], [list(x) for x in counts], text)
    tabs = [component_counts(n) for n in ns]
    payload = {
        "rows": [
            {"n": t.n, "entries": [{"m": m, "count": c} for m, c in t.entries]} for t in tabs
        ]
    }
    rows = [[t.n, m, c] for t in tabs for m, c in t.entries]
    if len(tabs) == 1:
        text = ", ".join(f"m={m}: {c}" for m, c in tabs[0].entries)
    else:
        # triangular layout: one row per n, columns m = 0, 1, ...; blank outside the bounds
        width = max(m for t in tabs for m, _ in t.entries) + 1
        cells = [["n"] + [f"m={m}" for m in range(width)]]
        for t in tabs:
            found = t.as_dict()
            cells.append([str(t.n)] + [str(found[m]) if m in found else "" for m in range(width)])
        widths = [max(len(row[j]) for row in cells) for j in range(width + 1)]
        text = "\n".join(
            " | ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells
        )
    return Output(payload, ["n", "m", "count"], rows, text)


def cmd_enumerate(args) -> Output:
    cs = enumerate_configs(args.d)
    pairs = [(xi, q) for xi, q in zip(cs.configs, cs.q_values) if args.q is None or q == args.q]
    payload = {
        "d": args.d,
        "q_filter": args.q,
        "split": {"q0": cs.split[0], "q1": cs.split[1]},
        "configs": [{"xi": _labels(xi), "q": q} for xi, q in pairs],
    }
    rows = [[",".join(_labels(xi)), q] for xi, q in pairs]
    text = "\n".join(f"{xi}  q={q}" for xi, q in pairs)
    return Output(payload, ["xi", "q"], rows, text)


def _config_from_args(args) -> Config:
    points = parse_points(args.xi)
    if len(points) != args.d:
        raise CommandError(f"--d {args.d} but --xi lists {len(points)} points")
    return Config(points)


def cmd_classify(args) -> Output:
    if args.d % 2 == 0:
        raise CommandError(f"classify needs odd d, got d={args.d}")
    xi = _config_from_args(args)
    cp = certified_points(xi)
    support = eigenspace_of_support(xi)
    payload = {
        "d": xi.d,
        "xi": _labels(xi),
        "q": q_of_config(xi),
        "support": support.value,
        "on_curve": _labels(cp.on_curve),
        "singular": _labels(cp.singular),
        "undetermined": _labels(cp.undetermined),
        "profiles": [
            {
                "x": str(p.x),
                "parity": theta(p.x).parity.value,
                "m_dom_plus": p.m_dom_plus,
                "m_dom_minus": p.m_dom_minus,
                "m_cod_plus": p.m_cod_plus,
                "m_cod_minus": p.m_cod_minus,
                "deficiency": p.deficiency,
                "verdict": p.verdict.value,
            }
            for p in cp.profiles
        ],
    }
    rows = [list(p.values()) for p in payload["profiles"]]
    set_name = "6_1" if support.value == "contains_6_1" else "10_1"
    text = "\n".join(
        [
            f"xi = {xi}",
            f"q(xi) = {payload['q']}",
            f"support: curve contains {set_name}",
            f"on curve: {_set_text(cp.on_curve)}",
            f"singular: {_set_text(cp.singular)}",
            f"undetermined: {_set_text(cp.undetermined)}",
        ]
    )
    return Output(payload, list(payload["profiles"][0].keys()), rows, text)


def cmd_orbits(args) -> Output:
    report = orbits_on_configs(args.d)
    payload = {
        "d": args.d,
        "orbit_count": len(report.orbits),
        "orbits": [
            {
                "representative": _labels(o.representative),
                "size": o.size,
                "q": o.q_value,
                "profile": o.profile,
            }
            for o in report.orbits
        ],
    }

    def fmt_profile(profile):
        return " ".join(f"{k}:{v}" for k, v in profile_counter(profile).items())

    rows = [
        [",".join(_labels(o.representative)), o.size, o.q_value, fmt_profile(o.profile)]
        for o in report.orbits
    ]
    if args.d >= 5:
        payload["note"] = "exploratory: decomposition found by exhaustive search"
    lines = [f"d={args.d}: {len(report.orbits)} orbits, total {sum(report.sizes)}"]
    lines += [
        f"{str(o.representative):<40} size={o.size:<4} q={o.q_value}  profile {fmt_profile(o.profile)}"
        for o in report.orbits
    ]
    if "note" in payload:
        lines.append("# " + payload["note"])
    return Output(payload, ["representative", "size", "q", "profile"], rows, "\n".join(lines))


def cmd_hudson(args) -> Output:
    grid = [[str(u) for u in row] for row in TABLE.grid]
    rows = [[i + 1, j + 1, grid[i][j]] for i in range(4) for j in range(4)]
    return Output({"grid": grid}, ["row", "col", "point"], rows, TABLE.render())


def cmd_correspondence(args) -> Output:
    records = []
    corrected = Config.from_labels(tables.CORRECTED_ROW[0])
    for q in (0, 1):
        for xi in enumerate_configs(3).with_q(q):
            note = ""
            if xi == corrected:
                note = "reference table reads (ba',cc',ab') -> 1+ba'+cc'+ab'; that triple has q=0"
            records.append(
                {
                    "xi": _labels(xi),
                    "q": q,
                    "curve": curve_of(xi),
                    "divisor": str(divisor_of(xi)),
                    "centers": _labels(divisor_centers(xi)),
                    "note": note,
                }
            )
    records.append(
        {
            "xi": ["1 (non-reduced)"],
            "q": None,
            "curve": "C",
            "divisor": "4·1",
            "centers": [],
            "note": f"{non_reduced_count(3)} configuration with non-reduced support",
        }
    )
    payload = {
        "rows": records,
        "note": "combinatorial pairing only; that it is the bijection induced by the "
        "Fourier-Mukai isomorphism is conjectural",
    }
    rows = [
        [",".join(r["xi"]), "" if r["q"] is None else r["q"], r["curve"], r["divisor"],
         " ".join(r["centers"]), r["note"]]
        for r in records
    ]
    lines = [
        f"({','.join(r['xi'])})".ljust(18) + f"q={'-' if r['q'] is None else r['q']}  "
        + r["curve"].ljust(6) + (r["divisor"].ljust(20) + f"  # {r['note']}" if r["note"] else r["divisor"])
        for r in records
    ]
    lines.append("# " + payload["note"])
    return Output(payload, ["xi", "q", "curve", "divisor", "centers", "note"], rows, "\n".join(lines))


def cmd_verify(args) -> Output:
    results = verify.run_all()
    ok = all(r.ok for r in results)
    payload = {
        "ok": ok,
        "checks": [
            {"check": r.name, "ok": r.ok, "summary": r.summary, "failures": r.failures}
            for r in results
        ],
    }
    rows = [[r.name, "PASS" if r.ok else "FAIL", r.summary] for r in results]
    lines = []
    for i, r in enumerate(results, 1):
        lines.append(f"[{'PASS' if r.ok else 'FAIL'}] {i:2d}. {r.name}: {r.summary}")
        lines += [f"       {msg}" for msg in r.failures[:10]]
    lines.append("all checks passed" if ok else "SOME CHECKS FAILED")
    return Output(payload, ["check", "status", "summary"], rows, "\n".join(lines), ok=ok)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-theta",
        description="Theta characteristics and fixed-point combinatorics on A[2].",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("\n", 2)[2],
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[common], help="zero-sum subset counts of F2^r (csv: i,gamma)")
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--method", choices=("gf", "brute", "both"), default="gf")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("components", parents=[common], help="fixed-locus component counts (csv: n,m,count)")
    p.add_argument("--n", required=True, help="n or a range such as 1-10")
    p.add_argument("--only-isolated", action="store_true", help="only N_0^{n+1}")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("enumerate", parents=[common], help="zero-sum d-subsets with q values (csv: xi,q)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, choices=(0, 1))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="certified points of one configuration")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--xi", required=True, help="comma-separated labels, e.g. \"ab',a',c,b,c'\"")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbits", parents=[common], help="Sp(A[2])-orbits on d-configurations")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("hudson", parents=[common], help="the Hudson table (csv: row,col,point)")
    p.set_defaults(func=cmd_hudson)

    p = sub.add_parser("correspondence", parents=[common], help="d=3 triples and divisors")
    p.set_defaults(func=cmd_correspondence)

    p = sub.add_parser("verify", parents=[common], help="recompute every tabulated value")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (CommandError, CapacityError, ConfigError, LabelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out.render(args.format))
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
