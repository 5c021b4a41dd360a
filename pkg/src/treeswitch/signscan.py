"""Grid evidence for the sign claims behind the ordering results.

The scans evaluate closed formulas on regular grids and report the first
point where a claimed sign fails.  They are evidence, not proof: a clean
report means no violation was found on the grid.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .diagonalize import Comparison, compare_index
from .family import FamilyCtx, make_member, make_Tj
from .tree import Tree, rooted, subdivide_edge


class ClaimViolated(AssertionError):
    pass


class ExceptionCase(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    """Points ``(x, r)`` with ``x >= max(x_lo, sqrt(r + 3))`` when ``constrained``.

    ``boundary_step`` adds the curve ``x = sqrt(r + 3)`` sampled on a finer
    ``r`` grid.
    """

    r_lo: float = 2.0
    r_hi: float = 50.0
    r_step: float = 0.05
    x_lo: float = 2.0
    x_hi: float = 50.0
    x_step: float = 0.05
    constrained: bool = True
    boundary_step: float | None = 0.01

    def __post_init__(self):
        if self.r_step <= 0 or self.x_step <= 0:
            raise ValueError("grid steps must be positive")
        if not (self.r_lo < self.r_hi and self.x_lo < self.x_hi):
            raise ValueError("grid ranges need lo < hi")

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        rs = np.arange(self.r_lo, self.r_hi + self.r_step / 2, self.r_step)
        xs, rr = [], []
        for r in rs:
            lo = max(self.x_lo, math.sqrt(r + 3)) if self.constrained else self.x_lo
            col = np.arange(lo, self.x_hi + self.x_step / 2, self.x_step)
            xs.append(col)
            rr.append(np.full(col.shape, r))
        if self.constrained and self.boundary_step:
            rb = np.arange(self.r_lo, self.r_hi + self.boundary_step / 2, self.boundary_step)
            xb = np.sqrt(rb + 3)
            keep = xb >= self.x_lo
            xs.append(xb[keep])
            rr.append(rb[keep])
        return np.concatenate(xs), np.concatenate(rr)


@dataclass
class ScanReport:
    claim: str
    points: int
    min_value: float
    max_value: float
    violations: int
    first_violation: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.first_violation is None

    def summary(self) -> str:
        if self.ok:
            return f"{self.claim}: no violation found on {self.points} grid points"
        return (
            f"{self.claim}: {self.violations} of {self.points} points violate the claim; "
            f"first at {self.first_violation}"
        )

    def raise_if_violated(self):
        if not self.ok:
            raise ClaimViolated(self.summary())

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=1)


def _report(claim, names, coords, values, ok_mask, notes=()) -> ScanReport:
    bad = np.flatnonzero(~ok_mask)
    first = None
    if bad.size:
        i = int(bad[0])
        first = {nm: float(c[i]) for nm, c in zip(names, coords)}
        first["value"] = float(values[i])
    finite = values[np.isfinite(values)]
    return ScanReport(
        claim,
        int(values.size),
        float(finite.min()) if finite.size else math.nan,
        float(finite.max()) if finite.size else math.nan,
        int(bad.size),
        first,
        list(notes),
    )


def point_cloud_csv(names: tuple[str, ...], coords, values) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([*names, "value"])
    for row in zip(*coords, values):
        w.writerow([f"{v:.12g}" for v in row])
    return buf.getvalue()


# -- the functions -----------------------------------------------------------


def sun_value(t, r):
    """``-t - r / (-t + 1/t)``: diagonal value at a sun center with ``r`` rays at ``-t``."""
    return -t - r / (-t + 1.0 / t)


def psi(t):
    return t / (t * t - 1.0)


def theta_of(lam):
    return (-lam - np.sqrt((lam - 2.0) * (lam + 2.0))) / 2.0


def g_value(x, r):
    """Positive exactly when ``psi(b_1) > theta`` at ``lam = x``, ``r1 = r``."""
    return psi(sun_value(x, r)) - theta_of(x)


def f_value(lam, r):
    """Limit of the gamma-junction margin as the bare path grows."""
    th = theta_of(lam)
    a2 = -lam + 1.0 / lam
    b2 = -lam - 1.0 / sun_value(lam, r)
    return th - 1.0 / b2 - 1.0 / (1.0 / a2 + 1.0 / th)


def junction_margin(lam, r, h0):
    """``a_{h0} - 1/b_2 - 1/(1/a_2 + 1/b_{h0})``, vectorized over ``lam`` and ``r``."""
    if h0 < 2:
        raise ValueError("h0 >= 2")
    lam = np.asarray(lam, dtype=float)
    a = -lam
    b = sun_value(lam, r)
    a2 = b2 = None
    for j in range(1, h0):
        a = -lam - 1.0 / a
        b = -lam - 1.0 / b
        if j == 1:
            a2, b2 = a, b
    return a - 1.0 / b2 - 1.0 / (1.0 / a2 + 1.0 / b)


# -- scans -------------------------------------------------------------------


def scan_phi_sq(grid: GridSpec | None = None, with_points: bool = False):
    """Claim: ``sun_value(t, r)**2 - 1 > 0`` (so ``b_1 < -1``)."""
    grid = grid or GridSpec()
    t, r = grid.points()
    v = sun_value(t, r) ** 2 - 1.0
    corner = sun_value(2.0, 2.0) ** 2 - 1.0
    notes = [
        f"literal region t >= 2 fails at (t, r) = (2, 2): value {corner:.12g}",
        "scanned region: " + ("t >= sqrt(r + 3)" if grid.constrained else "t >= x_lo"),
    ]
    rep = _report("phi^2 - 1 > 0", ("t", "r"), (t, r), v, v > 0, notes)
    return (rep, (t, r, v)) if with_points else rep


def scan_g(grid: GridSpec | None = None, with_points: bool = False):
    """Claim: ``g(x, r) > 0`` on ``x >= sqrt(r + 3)``, ``r >= 2``."""
    grid = grid or GridSpec()
    x, r = grid.points()
    with np.errstate(divide="ignore", invalid="ignore"):
        v = g_value(x, r)
    rep = _report("g > 0", ("x", "r"), (x, r), v, v > 0)
    return (rep, (x, r, v)) if with_points else rep


def scan_f(
    grid: GridSpec | None = None,
    h0_max: int = 60,
    mono_grid: GridSpec | None = None,
    with_points: bool = False,
):
    """Claims: ``f(lam, r1) < 0`` on the grid, and the junction margin is
    non-decreasing in ``h0`` on ``2..h0_max``.

    Once the margin has converged to double precision successive values may
    tie; a decrease larger than ``1e-12 * max(1, |value|)`` counts as a
    violation.
    """
    grid = grid or GridSpec()
    lam, r = grid.points()
    v = f_value(lam, r)
    rep = _report("f < 0", ("lam", "r"), (lam, r), v, v < 0)

    ml, mr = (mono_grid or grid).points()
    a2 = -ml + 1.0 / ml
    b1 = sun_value(ml, mr)
    b2 = -ml - 1.0 / b1
    a, b = a2, b2
    prev = a - 1.0 / b2 - 1.0 / (1.0 / a2 + 1.0 / b)
    mono_bad = np.zeros(ml.shape, dtype=bool)
    strict = np.zeros(ml.shape, dtype=int)
    for _ in range(3, h0_max + 1):
        a = -ml - 1.0 / a
        b = -ml - 1.0 / b
        cur = a - 1.0 / b2 - 1.0 / (1.0 / a2 + 1.0 / b)
        slack = 1e-12 * np.maximum(1.0, np.abs(cur))
        mono_bad |= cur < prev - slack
        strict += cur > prev
        prev = cur
    rep.notes.append(
        f"h0-monotonicity on {ml.size} (lam, r) samples, h0 = 2..{h0_max}: "
        f"{int(mono_bad.sum())} decreasing samples, {int(strict.sum())} strict increases"
    )
    if mono_bad.any():
        i = int(np.flatnonzero(mono_bad)[0])
        rep.violations += int(mono_bad.sum())
        if rep.first_violation is None:
            rep.first_violation = {"lam": float(ml[i]), "r": float(mr[i]), "h0_monotone": False}
    return (rep, (lam, r, v)) if with_points else rep


def scan_psi_b(q: int = 3, grid: GridSpec | None = None) -> ScanReport:
    """``psi(b_q) > theta``: the bound the Type II argument needs once ``q1 >= q``."""
    grid = grid or GridSpec()
    lam, r = grid.points()
    b = sun_value(lam, r)
    for _ in range(q - 1):
        b = -lam - 1.0 / b
    v = psi(b) - theta_of(lam)
    return _report(f"psi(b_{q}) > theta", ("lam", "r"), (lam, r), v, v > 0)


def check_psi_decreasing(lo: float = -50.0, hi: float = -1.0 - 1e-3, step: float = 1e-3) -> bool:
    t = np.arange(lo, hi, step)
    return bool(np.all(np.diff(psi(t)) < 0))


# -- tree-level checks ---------------------------------------------------------


def verify_Tj(ctx: FamilyCtx, t, j_max: int = 30, j_min: int = 3, tol: float = 1e-10) -> ScanReport:
    """``rho(member) > rho(T_j)`` for ``j = j_min..j_max``."""
    if j_min < 3 or j_max < j_min:
        raise ValueError(f"need 3 <= j_min <= j_max, got {j_min}..{j_max}")
    tree = make_member(ctx, t)
    bad = []
    for j in range(j_min, j_max + 1):
        res = compare_index(tree, make_Tj(ctx.r2, j), tol)
        if res is Comparison.INCONCLUSIVE:
            res = compare_index(tree, make_Tj(ctx.r2, j), tol, exact=True)
        if res is not Comparison.GREATER:
            bad.append((j, res.value))
    js = j_max - j_min + 1
    return ScanReport(
        f"rho({tuple(t)}) > rho(T_j)",
        js,
        float(j_min),
        float(j_max),
        len(bad),
        {"j": bad[0][0], "result": bad[0][1]} if bad else None,
    )


class HSDirection(enum.Enum):
    DECREASED = "Decreased"
    INCREASED = "Increased"


def _walk_to_branch(t: Tree, start: int, came_from: int) -> int:
    """Follow degree-2 vertices away from ``came_from``; return where the walk stops."""
    prev, cur = came_from, start
    while t.degree(cur) == 2:
        nxt = next(w for w in t.neighbors(cur) if w != prev)
        prev, cur = cur, nxt
    return cur


def on_internal_path(t: Tree, e: tuple[int, int]) -> bool:
    a, b = e
    return t.degree(_walk_to_branch(t, a, b)) > 2 and t.degree(_walk_to_branch(t, b, a)) > 2


def is_W_shape(t: Tree) -> bool:
    """Two degree-3 vertices at distance ``n - 5``, everything else degree <= 2."""
    degs = [t.degree(v) for v in range(t.n)]
    big = [v for v, d in enumerate(degs) if d >= 3]
    if len(big) != 2 or any(degs[v] != 3 for v in big):
        return False
    _, parent = rooted(t, big[0])
    dist, v = 0, big[1]
    while v != big[0]:
        v = parent[v]
        dist += 1
    return dist == t.n - 5


def verify_hoffman_smith(t: Tree, e: tuple[int, int], tol: float = 1e-10) -> HSDirection:
    """Subdivide ``e`` and check the index moves the way Hoffman-Smith predicts."""
    if is_W_shape(t):
        raise ExceptionCase("tree is W-shaped; the subdivision rule does not apply")
    internal = on_internal_path(t, e)
    t2 = subdivide_edge(t, e)
    res = compare_index(t, t2, tol)
    if res is Comparison.INCONCLUSIVE:
        res = compare_index(t, t2, tol, exact=True)
    if res is Comparison.INCONCLUSIVE:
        raise ClaimViolated(f"subdividing {e} left the index unchanged")
    got = HSDirection.DECREASED if res is Comparison.GREATER else HSDirection.INCREASED
    want = HSDirection.DECREASED if internal else HSDirection.INCREASED
    if got is not want:
        raise ClaimViolated(f"subdividing {e}: expected {want.value}, observed {got.value}")
    return got
