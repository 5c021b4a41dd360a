"""Exit criteria of the package, one function per criterion.

Each ``criterion_k`` returns a :class:`CriterionResult`; nothing here raises on
a failed check, so a run always reports every criterion.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from decimal import Decimal

import networkx as nx
import numpy as np

from .diagonalize import Comparison, compare_index, inertia, spectral_radius
from .family import (
    FamilyCtx,
    GSpec,
    Triple,
    enumerate_family,
    extremal_members,
    make_G_member,
    make_member,
)
from .oracle import adjacency_matrix, eigenvalues, oracle_inertia
from .ordering import MonotonicityViolation, build_catalog, verify_gamma_junction
from .recurrences import (
    a_closed,
    a_values,
    critical_radii,
    iterate_all,
    make_ctx,
    z_closed,
    z_first,
    z_values,
)
from .signscan import (
    ClaimViolated,
    scan_f,
    scan_g,
    scan_phi_sq,
    on_internal_path,
    verify_hoffman_smith,
    verify_Tj,
)
from .switches import DomainViolation, Unreachable, decompose, replay
from .tree import Tree, build_tree, path, sun

SEED = 1729

# Example family n = 23, r = (2, 3): members in catalog order with their indices.
TABLE_23 = [
    ((8, 2, 2), "2.31431268823172996316982502630"),
    ((7, 3, 2), "2.30752321205156788164155922354"),
    ((6, 4, 2), "2.30509257122848263666229555974"),
    ((5, 5, 2), "2.30414417603593895847264293478"),
    ((4, 6, 2), "2.30348720654135784657134525755"),
    ((3, 7, 2), "2.30226165044440472718571097461"),
    ((2, 8, 2), "2.29881642949995094980856594643"),
    ((7, 2, 3), "2.28520768467980257500859073365"),
    ((6, 3, 3), "2.28076523286917478390041282633"),
    ((5, 4, 3), "2.27913084342903308996825366690"),
    ((4, 5, 3), "2.27834791245706879712729095155"),
    ((3, 6, 3), "2.27748824925244285093685838480"),
    ((2, 7, 3), "2.27554403106324050144208754160"),
    ((6, 2, 4), "2.27010998510725135104117051475"),
    ((5, 3, 4), "2.26762484634172519636930335282"),
    ((4, 4, 4), "2.26667762008239070931668388638"),
    ((3, 5, 4), "2.26605728367174815669677409819"),
    ((2, 6, 4), "2.26506821261118740374393886088"),
    ((5, 2, 5), "2.26290253458453744084697620016"),
    ((4, 3, 5), "2.26171078345443097808224085587"),
    ((3, 4, 5), "2.26119844487818869745804831320"),
    ((2, 5, 5), "2.26069897200749878293447592468"),
    ((4, 2, 6), "2.25980268994372236598891968054"),
    ((3, 3, 6), "2.25927957177517211016191460326"),
    ((2, 4, 6), "2.25898741243972985580277387992"),
    ((3, 2, 7), "2.25857320563154910353684549335"),
    ((2, 3, 7), "2.25834278165321357168906331906"),
    ((2, 2, 8), "2.25810972712429442797185863240"),
]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} [{self.number}] {self.title}: {self.detail} ({self.seconds:.2f}s)"


def acceptance_contexts() -> list[FamilyCtx]:
    """``n = 17..25`` with ``(r1, r2)`` in ``{(2,3), (2,4), (3,4)}``, where defined."""
    out = []
    for r1, r2 in ((2, 3), (2, 4), (3, 4)):
        for n in range(17, 26):
            if n >= 7 + 2 * (r1 + r2):
                out.append(FamilyCtx(n, r1, r2))
    return out


def random_tree(rng: random.Random, n: int) -> Tree:
    if n <= 2:
        return path(n)
    g = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return build_tree(n, g.edges())


def _certified_greater(t1: Tree, t2: Tree, tol: float = 1e-12) -> str | None:
    """How ``rho(t1) > rho(t2)`` was certified, or ``None``."""
    if compare_index(t1, t2, tol) is Comparison.GREATER:
        return "bracket"
    if compare_index(t1, t2, tol, exact=True) is Comparison.GREATER:
        return "exact"
    return None


def _rho(t: Tree, tol: float = 1e-12) -> float:
    lo, hi = spectral_radius(t, tol)
    return (lo + hi) / 2


# -- criteria ----------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    t0 = time.perf_counter()
    cat = build_catalog(FamilyCtx(23, 2, 3), tol=1e-12)
    elapsed = time.perf_counter() - t0
    if len(cat.rows) != len(TABLE_23):
        return False, f"{len(cat.rows)} rows, expected {len(TABLE_23)}"
    order_ok = all(tuple(r.triple) == t for r, (t, _) in zip(cat.rows, TABLE_23))
    worst = max(
        abs(Decimal(repr((r.index_lo + r.index_hi) / 2)) - Decimal(v))
        for r, (_, v) in zip(cat.rows, TABLE_23)
    )
    ok = order_ok and worst <= Decimal("1e-9") and elapsed < 2.0
    return ok, (
        f"28 rows, order {'matches' if order_ok else 'DIFFERS'}, "
        f"max |index - table| = {float(worst):.2e}, catalog built in {elapsed:.2f}s"
    )


def _query_points(rng: random.Random, t: Tree, ev: np.ndarray, k: int, gap: float) -> list[float]:
    span = t.max_degree + 1.0
    out = []
    while len(out) < k:
        x = rng.uniform(-span, span)
        if ev.size == 0 or np.min(np.abs(ev - x)) >= gap:
            out.append(x)
    return out


def criterion_2(n_random: int = 200, queries: int = 25) -> tuple[bool, str]:
    rng = random.Random(SEED)
    trees = [random_tree(rng, rng.randint(1, 12)) for _ in range(n_random)]
    n_members = 0
    for ctx in acceptance_contexts():
        for t in enumerate_family(ctx):
            trees.append(make_member(ctx, t))
            n_members += 1
    t0 = time.perf_counter()
    mismatches = 0
    first = None
    for t in trees:
        ev = eigenvalues(adjacency_matrix(t))
        for x in _query_points(rng, t, ev, queries, 1e-8):
            got = inertia(t, x, root=rng.randrange(t.n))
            want = oracle_inertia(t, x)
            if got != want:
                mismatches += 1
                first = first or (t.n, x, got, want)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 30.0
    detail = (
        f"{len(trees)} trees ({n_random} random, {n_members} family members), "
        f"{len(trees) * queries} queries, {mismatches} mismatches in {elapsed:.2f}s"
    )
    if first:
        detail += f"; first mismatch n={first[0]} x={first[1]:.6g}"
    return ok, detail


def recurrence_agreement(lams, jmax: int = 60):
    """Worst relative error of closed forms against iteration, keyed by radius label."""
    worst: dict[str, tuple[float, float, int]] = {}

    def note(key, err, lam, j):
        if err > worst.get(key, (-1.0,))[0]:
            worst[key] = (err, lam, j)

    for lam in lams:
        ctx = make_ctx(lam)
        for j, it in enumerate(iterate_all(lam, -lam, jmax), start=1):
            cl = a_closed(ctx, j)
            note("a", abs(cl - it) / max(1.0, abs(it)), lam, j)
        r_up = critical_radii(ctx).r_upper
        for label, r in (("2", 2.0), ("3", 3.0), ("5", 5.0), ("r*", r_up)):
            for j, it in enumerate(iterate_all(lam, z_first(ctx, r), jmax), start=1):
                cl = z_closed(ctx, r, j)
                note(f"z(r={label})", abs(cl - it) / max(1.0, abs(it)), lam, j)
    return worst


def criterion_3(tol: float = 1e-12) -> tuple[bool, str]:
    lams = [round(2.01 + 0.01 * i, 2) for i in range(800)]
    worst = recurrence_agreement(lams)
    bad = [k for k, (e, _, _) in worst.items() if e > tol]
    parts = [f"{k}: {e:.1e}" + (f" at lam={lam}, j={j}" if e > tol else "") for k, (e, lam, j) in worst.items()]
    return not bad, "max rel. error " + "; ".join(parts)


def criterion_4() -> tuple[bool, str]:
    worst = 0.0
    for r in range(2, 11):
        worst = max(worst, abs(_rho(sun(r)) - math.sqrt(r + 1)))
    return worst <= 1e-10, f"r = 2..10, max |rho(S_r) - sqrt(r+1)| = {worst:.1e}"


def criterion_5(n_samples: int = 50) -> tuple[bool, str]:
    pairs = 0
    how = {"bracket": 0, "exact": 0}
    members = []
    for ctx in acceptance_contexts():
        try:
            cat = build_catalog(ctx)
        except MonotonicityViolation as e:
            return False, f"n={ctx.n} r=({ctx.r1},{ctx.r2}): {e}"
        pairs += len(cat.certificates)
        for c in cat.certificates:
            how[c] += 1
        members += [(ctx, t) for t in enumerate_family(ctx)]
    rng = random.Random(SEED)
    worst = -math.inf
    for ctx, t in rng.sample(members, n_samples):
        lam = _rho(make_member(ctx, t))
        a = a_values(lam, t.h + 1)
        b = z_values(lam, ctx.r1, t.q1 + 2)
        val = (a[t.h - 1] - a[t.h]) + (b[t.q1 + 1] - b[t.q1])
        worst = max(worst, val)
    ok = worst < 0
    return ok, (
        f"{pairs} adjacent pairs certified ({how['bracket']} bracket, {how['exact']} exact); "
        f"type II decrease condition max over {n_samples} members = {worst:.3e}"
    )


def criterion_6() -> tuple[bool, str]:
    total, bad = 0, []
    for ctx in acceptance_contexts():
        for j in range(ctx.h0 - 2):
            total += 1
            if not verify_gamma_junction(ctx, j):
                bad.append((ctx.n, ctx.r1, ctx.r2, j))
    return not bad, f"{total} junctions checked, {len(bad)} failed" + (f"; first {bad[0]}" if bad else "")


def criterion_7() -> tuple[bool, str]:
    reps = [scan_phi_sq(), scan_g(), scan_f()]
    ok = all(r.ok for r in reps)
    return ok, " | ".join(r.summary() for r in reps) + " | " + reps[2].notes[-1]


def criterion_8() -> tuple[bool, str]:
    checks, bad = 0, []
    for ctx in acceptance_contexts():
        for t in extremal_members(ctx):
            rep = verify_Tj(ctx, t, j_max=30)
            checks += rep.points
            if not rep.ok:
                bad.append((ctx.n, ctx.r1, ctx.r2, tuple(t), rep.first_violation))
    return not bad, f"{checks} comparisons rho(member) > rho(T_j), {len(bad)} failed" + (
        f"; first {bad[0]}" if bad else ""
    )


def criterion_9() -> tuple[bool, str]:
    count, bad = 0, []
    for ctx in acceptance_contexts():
        start = Triple(ctx.h0, 2, 2)
        for t in enumerate_family(ctx):
            for basis in ("ab", "ag"):
                count += 1
                try:
                    seq = replay(decompose(ctx, t, basis), start)
                except (Unreachable, DomainViolation) as e:
                    bad.append((ctx.n, tuple(t), basis, str(e)))
                    continue
                prefix_ok = all(min(s) >= 2 and sum(s) == ctx.path_total for s in seq)
                if seq[-1] != t or not prefix_ok:
                    bad.append((ctx.n, tuple(t), basis, "replay mismatch"))
    return not bad, f"{count} decompositions replayed, {len(bad)} failed" + (f"; first {bad[0]}" if bad else "")


def g_family_samples(rng: random.Random, k: int = 20, n0_max: int = 8) -> list[GSpec]:
    out = []
    while len(out) < k:
        base = random_tree(rng, rng.randint(2, n0_max))
        q2 = rng.randint(3, 8)
        q1 = rng.randint(3, q2)  # q1 < q2 + 1, and q1 - 1 >= 2 after the move
        out.append(GSpec(base, rng.randrange(base.n), q1, q2))
    return out


def criterion_10() -> tuple[bool, str]:
    rng = random.Random(SEED)
    how = {"bracket": 0, "exact": 0}
    bad = []
    worst_gap = math.inf
    for spec in g_family_samples(rng):
        t = make_G_member(spec)
        t2 = make_G_member(GSpec(spec.base, spec.attach, spec.q1 - 1, spec.q2 + 1))
        c = _certified_greater(t, t2)
        if c is None:
            bad.append((spec.base.n, spec.q1, spec.q2))
            continue
        how[c] += 1
        lam = _rho(t)
        a = a_values(lam, spec.q2 + 1)
        gap = (a[spec.q2] + 1 / a[spec.q2]) - (a[spec.q1 - 1] + 1 / a[spec.q1 - 1])
        worst_gap = min(worst_gap, gap)
    ok = not bad and worst_gap > 0
    return ok, (
        f"20 moves (q1,q2) -> (q1-1,q2+1): {how['bracket']} bracket, {how['exact']} exact, "
        f"{len(bad)} uncertified; min margin of the new-type condition = {worst_gap:.3e}"
    )


def check_hoffman_smith() -> tuple[bool, str]:
    """Subdivision direction on every edge of the extremal members of each context."""
    n_int = n_ext = 0
    for ctx in acceptance_contexts():
        for tr in extremal_members(ctx):
            t = make_member(ctx, tr)
            for e in t.sorted_edges():
                try:
                    verify_hoffman_smith(t, e)
                except ClaimViolated as err:
                    return False, f"n={ctx.n} {tuple(tr)} edge {e}: {err}"
                if on_internal_path(t, e):
                    n_int += 1
                else:
                    n_ext += 1
    return True, f"{n_int} internal edges decreased, {n_ext} other edges increased"


CRITERIA = {
    1: ("Example-table reproduction", criterion_1),
    2: ("Oracle equivalence", criterion_2),
    3: ("Closed-form agreement", criterion_3),
    4: ("Sun radius", criterion_4),
    5: ("Switch monotonicity", criterion_5),
    6: ("Gamma junction", criterion_6),
    7: ("Sign scans", criterion_7),
    8: ("T_j domination", criterion_8),
    9: ("Reachability", criterion_9),
    10: ("G-family check", criterion_10),
}


def run(number: int) -> CriterionResult:
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, title, bool(passed), detail, time.perf_counter() - t0)


def run_all(numbers=None) -> list[CriterionResult]:
    return [run(k) for k in (numbers or sorted(CRITERIA))]
