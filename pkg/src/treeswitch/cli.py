"""Command-line front end.

    treeswitch index --tree p2.json [--tol 1e-12] [--exact]
    treeswitch family enumerate --n 23 --r1 2 --r2 3
    treeswitch catalog --n 23 --r1 2 --r2 3 [--csv out.csv | --json]
    treeswitch switch --from "[5,4,3]" --to "[4,5,3]" --n 23 --r1 2 --r2 3
    treeswitch recurrence --lambda 2.5 --r 2 --r 3 --jmax 20
    treeswitch scan {phi,g,f,psi} [--csv out.csv]
    treeswitch verify {table23,oracle,...,all}

Exit status: 0 on success, 1 when a claim or acceptance check fails, 2 on bad
flags or parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import acceptance
from .diagonalize import Comparison, compare_index, spectral_radius
from .family import FamilyCtx, FamilyError, MemberSpec, enumerate_family, format_notation, make_member, parse_triple
from .ordering import MonotonicityViolation, NotInFamily, SwitchEffect, build_catalog, classify_switch
from .recurrences import a_values, z_values
from .signscan import ClaimViolated, point_cloud_csv, scan_f, scan_g, scan_phi_sq, scan_psi_b
from .tree import TreeError, tree_from_json

VERIFY = {
    "table23": [1],
    "oracle": [2],
    "recurrence": [3],
    "sun": [4],
    "switches": [5],
    "gamma": [6],
    "signs": [7],
    "tj": [8],
    "reach": [9],
    "gfamily": [10],
    "hoffman": [],
    "all": sorted(acceptance.CRITERIA),
}


class UsageError(Exception):
    pass


def _fmt(x, digits: int) -> str:
    return f"{float(x):.{digits}g}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _ctx(args) -> FamilyCtx:
    return FamilyCtx(args.n, args.r1, args.r2)


def cmd_index(args) -> int:
    try:
        t = tree_from_json(Path(args.tree).read_text())
    except OSError as e:
        raise UsageError(f"cannot read {args.tree}: {e.strerror}") from None
    lo, hi = spectral_radius(t, args.tol, exact=args.exact)
    print(f"[{_fmt(lo, args.digits)}, {_fmt(hi, args.digits)}]")
    return 0


def cmd_family(args) -> int:
    ctx = _ctx(args)
    for t in enumerate_family(ctx):
        print(format_notation(MemberSpec(ctx, t), args.style))
    return 0


def cmd_catalog(args) -> int:
    cat = build_catalog(_ctx(args), args.tol)
    text = cat.to_json(args.digits) + "\n" if args.json else cat.to_csv(args.digits)
    _emit(text, args.csv)
    return 0


def cmd_switch(args) -> int:
    ctx = _ctx(args)
    src, dst = parse_triple(args.src), parse_triple(args.dst)
    effect = classify_switch(ctx, src, dst)
    print(effect.value)
    if effect is SwitchEffect.SAME:
        return 0
    cat = build_catalog(ctx, args.tol)
    r_src, r_dst = cat.rank_of(src), cat.rank_of(dst)
    w_src, w_dst = cat.rows[r_src - 1].word, cat.rows[r_dst - 1].word
    t1, t2 = make_member(ctx, src), make_member(ctx, dst)
    res = compare_index(t1, t2, args.tol)
    mode = "float"
    if res is Comparison.INCONCLUSIVE:
        res, mode = compare_index(t1, t2, args.tol, exact=True), "exact"
    want = Comparison.GREATER if effect is SwitchEffect.DECREASE else Comparison.LESS
    print(
        f"certificate: rank {r_src} ({w_src or 'e'}) -> rank {r_dst} ({w_dst or 'e'}); "
        f"compare_index({src}, {dst}) = {res.value} [{mode}]"
    )
    if res is not want:
        raise MonotonicityViolation(f"expected {want.value}, compare_index gave {res.value}")
    return 0


def cmd_recurrence(args) -> int:
    rs = args.r or []
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "a_j", *[f"z_j(r={r:g})" for r in rs]])
    a = a_values(args.lam, args.jmax)
    zs = [z_values(args.lam, r, args.jmax) for r in rs]
    for j in range(args.jmax):
        w.writerow([j + 1, _fmt(a[j], args.digits), *[_fmt(z[j], args.digits) for z in zs]])
    _emit(buf.getvalue(), args.csv)
    return 0


def cmd_scan(args) -> int:
    if args.claim == "psi":
        rep, pts = scan_psi_b(), None
    else:
        fn = {"phi": scan_phi_sq, "g": scan_g, "f": scan_f}[args.claim]
        rep, pts = fn(with_points=True)
    if args.csv:
        if pts is None:
            raise UsageError("no point cloud for this claim")
        names = {"phi": ("t", "r"), "g": ("x", "r"), "f": ("lam", "r")}[args.claim]
        Path(args.csv).write_text(point_cloud_csv(names, pts[:2], pts[2]))
    print(rep.to_json())
    if not rep.ok:
        raise ClaimViolated(rep.summary())
    return 0


def cmd_verify(args) -> int:
    ok = True
    for res in acceptance.run_all(VERIFY[args.target]):
        print(res.line(), flush=True)
        ok &= res.passed
    if args.target in ("hoffman", "all"):
        passed, detail = acceptance.check_hoffman_smith()
        print(f"{'PASS' if passed else 'FAIL'} [hoffman] Subdivision direction: {detail}")
        ok &= passed
    return 0 if ok else 1


def _positive(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {s}")
    return v


def _add_ctx(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treeswitch", description="Spectral-radius ordering of trees under 2-switches.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="spectral radius bracket of a JSON tree")
    p.add_argument("--tree", required=True)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(fn=cmd_index)

    p = sub.add_parser("family", help="list the members of a family")
    p.add_argument("action", choices=["enumerate"])
    _add_ctx(p)
    p.add_argument("--style", choices=["compact", "long"], default="compact")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("catalog", help="members in decreasing index order")
    _add_ctx(p)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.add_argument("--csv", "--out", dest="csv", metavar="OUT", help="write to OUT instead of stdout")
    p.add_argument("--json", action="store_true")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("switch", help="classify a move between two members")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    _add_ctx(p)
    p.add_argument("--tol", type=_positive, default=1e-12)
    p.set_defaults(fn=cmd_switch)

    p = sub.add_parser("recurrence", help="CSV of a_j and z_j(r)")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--r", type=float, action="append")
    p.add_argument("--jmax", type=int, default=20)
    p.add_argument("--csv", "--out", dest="csv", metavar="OUT")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(fn=cmd_recurrence)

    p = sub.add_parser("scan", help="grid scan of a sign claim")
    p.add_argument("claim", choices=["phi", "g", "f", "psi"])
    p.add_argument("--csv", metavar="OUT", help="point cloud for plotting")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("verify", help="run acceptance checks")
    p.add_argument("target", choices=list(VERIFY))
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "digits", 12) < 1 or getattr(args, "jmax", 1) < 1:
        ap.error("--digits and --jmax must be at least 1")
    try:
        return args.fn(args)
    except (UsageError, FamilyError, TreeError, NotInFamily, json.JSONDecodeError) as e:
        print(f"treeswitch: error: {e}", file=sys.stderr)
        return 2
    except (ClaimViolated, MonotonicityViolation) as e:
        print(f"treeswitch: violation: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
