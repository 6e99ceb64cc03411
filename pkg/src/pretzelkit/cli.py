"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 not a knot or invalid
input, 3 magnitude cap exceeded, 4 outside the plumbing region.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from .errors import InvalidFraction, InvariantViolation, MagnitudeError, NotAKnot, PreconditionViolated
from .plumbing import negative_continued_fraction, plumbing_graph, plumbing_triple, seifert_presentation
from .pretzel import DEFAULT_MAX_ABS, PretzelParams, canonicalize, check_magnitude, is_knot
from .regions import family_member, in_even_x, in_even_y, is_all_odd
from .report import build_report, render_text
from .tau import is_tau_nondecreasing, tau_sequence

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP, EXIT_REGION = 0, 1, 2, 3, 4

REGIONS = {
    "all": lambda cp: True,
    "odd": is_all_odd,
    "even": lambda cp: not is_all_odd(cp),
    "even-x": in_even_x,
    "even-y": in_even_y,
    "family": lambda cp: family_member(cp) is not None,
    "plumbing": lambda cp: plumbing_triple(cp) is not None,
}
STATUSES = ("Squeezed", "NotSqueezed", "Unknown")


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _params(args) -> PretzelParams:
    params = PretzelParams(args.p, args.q, args.r)
    check_magnitude(params, args.max_abs)
    return params


def cmd_report(args) -> int:
    rep = build_report(_params(args))
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(render_text(rep))
    return EXIT_OK


def scan_triples(p_range, q_range, r_range, region="all", max_abs=DEFAULT_MAX_ABS) -> list[PretzelParams]:
    """Sorted, deduplicated canonical triples from a box, restricted to a region."""
    for lo, hi in (p_range, q_range, r_range):
        for v in (lo, hi):
            if abs(v) > max_abs and lo <= hi:
                raise MagnitudeError(f"range bound {v} exceeds the magnitude cap {max_abs}")
    keep = REGIONS[region]
    seen = set()
    for t in product(*(range(lo, hi + 1) for lo, hi in (p_range, q_range, r_range))):
        if not is_knot(*t):
            continue
        cp = canonicalize(PretzelParams(*t)).params
        if cp not in seen and keep(cp):
            seen.add(cp)
    return sorted(seen)


def scan_rows(triples, status=None, jobs=1) -> list[dict]:
    if jobs > 1 and len(triples) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(build_report, triples, chunksize=max(1, len(triples) // (4 * jobs))))
    else:
        reports = [build_report(t) for t in triples]
    rows = [rep.flat() for rep in reports]
    if status:
        rows = [row for row in rows if row["status"] == status]
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\r\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


def cmd_scan(args) -> int:
    triples = scan_triples(args.p, args.q, args.r, args.region, args.max_abs)
    rows = scan_rows(triples, args.status, args.jobs)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        text = rows_to_csv(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.summary:
        counts = {s: sum(1 for row in rows if row["status"] == s) for s in STATUSES}
        print(f"{len(rows)} knots: " + ", ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return EXIT_OK


def cmd_tau(args) -> int:
    params = _params(args)
    if not is_knot(*params):
        raise NotAKnot(f"{params} is a link")
    try:
        s = seifert_presentation(params)
    except PreconditionViolated:
        _err(f"{params} is outside the plumbing region: need p >= 2, q <= -2, r >= 2 "
             "and 1/p + 1/q + 1/r != 0")
        return EXIT_REGION
    prof = is_tau_nondecreasing(s)
    seq = tau_sequence(s, args.max_n)
    if args.format == "json":
        out = {"seifert": s.to_dict(), "plumbing": plumbing_graph(s).to_dict(), "tau": seq, **prof.to_dict()}
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"seifert    e0={s.e0} legs={[list(leg) for leg in s.legs]}" + ("  (cover of the mirror)" if s.mirror else ""))
    print(f"tau        {seq}")
    state = "nondecreasing" if prof.nondecreasing else "not nondecreasing"
    print(f"profile    {state}, L={prof.period}, increment={prof.increment}, "
          f"min={prof.min_over_period}, first_violation={prof.first_violation}")
    return EXIT_OK


def cmd_cf(args) -> int:
    print(negative_continued_fraction(args.num, args.den))
    return EXIT_OK


def family_rows(b_max: int) -> list[dict]:
    rows = []
    for b in range(1, b_max + 1):
        for a in range(b + 1, 2 * b + 1):
            params = PretzelParams(2 * b + 2, -(2 * b + 1), 2 * a + 1)
            rep = build_report(params)
            checks = {
                "tau_nondecreasing": bool(rep.profile and rep.profile["nondecreasing"]),
                "sigma": rep.sigma == -2 * (a - b),
                "qm": rep.qm.exact and rep.qm.value == a - b,
                "s_half": rep.s // 2 == a - b - 1,
                "not_squeezed": rep.verdict.status == "NotSqueezed",
            }
            rows.append({
                "a": a, "b": b, "p": params.p, "q": params.q, "r": params.r,
                "L": rep.profile["L"] if rep.profile else None,
                "sigma": rep.sigma, "qm": rep.qm.value, "s_half": rep.s // 2,
                "status": rep.verdict.status, "ok": all(checks.values()),
            })
    return rows


def cmd_family(args) -> int:
    rows = family_rows(args.b_max)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        for row in rows:
            mark = "ok  " if row["ok"] else "FAIL"
            print(f"{mark} b={row['b']} a={row['a']} P({row['p']},{row['q']},{row['r']}) L={row['L']} "
                  f"sigma={row['sigma']} q_M={row['qm']} s/2={row['s_half']} {row['status']}")
    return EXIT_OK if all(row["ok"] for row in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pretzelkit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def triple(sp):
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.add_argument("r", type=int)
        sp.add_argument("--max-abs", type=int, default=DEFAULT_MAX_ABS, help="magnitude cap for parameters")

    sp = sub.add_parser("report", help="all invariants of one pretzel knot")
    triple(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("scan", help="tabulate canonical knots in a parameter box")
    for name in ("p", "q", "r"):
        sp.add_argument(f"--{name}", nargs=2, type=int, metavar=("LO", "HI"), required=True,
                        help=f"inclusive range for {name}")
    sp.add_argument("--region", choices=sorted(REGIONS), default="all")
    sp.add_argument("--status", choices=STATUSES)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--output", "-o")
    sp.add_argument("--summary", action="store_true", help="print status counts to stderr")
    sp.add_argument("--max-abs", type=int, default=DEFAULT_MAX_ABS)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("tau", help="tau-sequence and monotonicity profile")
    triple(sp)
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_tau)

    sp = sub.add_parser("cf", help="negative continued fraction of num/den")
    sp.add_argument("num", type=int)
    sp.add_argument("den", type=int)
    sp.set_defaults(func=cmd_cf)

    sp = sub.add_parser("family", help="verify P(2b+2,-(2b+1),2a+1) for b <= b-max")
    sp.add_argument("--b-max", type=int, default=6)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_family)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAKnot as exc:
        _err(str(exc))
        return EXIT_INPUT
    except MagnitudeError as exc:
        _err(str(exc))
        return EXIT_CAP
    except InvalidFraction as exc:
        _err(str(exc))
        return EXIT_INPUT
    except InvariantViolation as exc:
        _err(f"verification failed: {exc}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
