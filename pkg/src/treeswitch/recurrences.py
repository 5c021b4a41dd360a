"""The Möbius recurrence ``z -> -lam - 1/z`` that Diagonalize runs along paths.

Along a pendant path every diagonal value is obtained from the previous one by
``phi(t) = -lam - 1/t``.  For ``lam > 2`` the map has two real fixed points,
an attracting ``theta < -1`` and a repelling ``1/theta``, and the sequences
started at a leaf (``a_j``) or at a sun center (``z_j(r)``) have closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# beyond this the correction term is below double resolution of theta
_LOG_CUTOFF = math.log(1e15)


class LambdaOutOfRange(ValueError):
    pass


class AtPole(ValueError):
    pass


class RadiusOutOfWindow(ValueError):
    pass


def phi(lam: float, t: float) -> float:
    return -lam - 1.0 / t


def iterate(lam: float, z1: float, j: int) -> float:
    """``j``-th term of ``z_{k+1} = phi(z_k)`` from ``z_1``; defined for any ``lam``."""
    if j < 1:
        raise ValueError("index starts at 1")
    z = z1
    for _ in range(j - 1):
        z = -lam - 1.0 / z
    return z


def iterate_all(lam: float, z1: float, jmax: int) -> list[float]:
    """``[z_1, ..., z_jmax]``."""
    out = [z1]
    for _ in range(jmax - 1):
        out.append(-lam - 1.0 / out[-1])
    return out


@dataclass(frozen=True)
class RecurrenceCtx:
    lam: float
    theta: float
    sqrt_disc: float
    a2: float

    @property
    def log_theta_sq(self) -> float:
        return 2.0 * math.log(-self.theta)


@dataclass(frozen=True)
class CriticalRadii:
    r_lower: float  # pole of beta(r)
    r_upper: float  # root of beta(r)


def make_ctx(lam: float) -> RecurrenceCtx:
    lam = float(lam)
    if not lam > 2.0:
        raise LambdaOutOfRange(f"need lam > 2 for real fixed points, got {lam}")
    s = math.sqrt((lam - 2.0) * (lam + 2.0))
    return RecurrenceCtx(lam, (-lam - s) / 2.0, s, -lam + 1.0 / lam)


def _theta_pow(ctx: RecurrenceCtx, j: int) -> float:
    """``(theta**2)**j``, or ``inf`` once it exceeds the cutoff."""
    e = j * ctx.log_theta_sq
    return math.inf if e > 700.0 else math.exp(e)


def a_closed(ctx: RecurrenceCtx, j: int) -> float:
    if j < 1:
        raise ValueError("index starts at 1")
    if j * ctx.log_theta_sq > _LOG_CUTOFF + math.log(1e3):
        return ctx.theta - ctx.sqrt_disc * math.exp(-j * ctx.log_theta_sq)
    return ctx.theta - ctx.sqrt_disc / (_theta_pow(ctx, j) - 1.0)


def a_iter(ctx: RecurrenceCtx, j: int) -> float:
    return iterate(ctx.lam, -ctx.lam, j)


def critical_radii(ctx: RecurrenceCtx) -> CriticalRadii:
    return CriticalRadii(ctx.a2 / ctx.theta, ctx.a2 * ctx.theta)


def beta_coeff(ctx: RecurrenceCtx, r: float) -> float:
    th = ctx.theta
    den = ctx.a2 * th - r * th * th
    if abs(r - ctx.a2 / th) <= 1e-12 * max(1.0, abs(r)) or den == 0.0:
        raise AtPole(f"beta has a pole at r = {ctx.a2 / th}")
    return (r - ctx.a2 * th) / den


def z_first(ctx: RecurrenceCtx, r: float) -> float:
    """Value at a sun center carrying ``r`` pendant P2's."""
    return -ctx.lam - r / ctx.a2


def z_closed(ctx: RecurrenceCtx, r: float, j: int) -> float:
    """Closed form of ``z_j(r)``, no window check."""
    if j < 1:
        raise ValueError("index starts at 1")
    th = ctx.theta
    beta = beta_coeff(ctx, r)
    e = j * ctx.log_theta_sq
    if beta > 0 and math.log(beta) + e > _LOG_CUTOFF:
        # denominator beta*(theta^2)^j + 1 is huge: the correction is below resolution
        return th + (1.0 / th - th) * math.exp(-(math.log(beta) + e))
    if e > 700.0:
        return th if beta != 0.0 else 1.0 / th
    return th + (1.0 / th - th) / (beta * math.exp(e) + 1.0)


def z_iter(ctx: RecurrenceCtx, r: float, j: int) -> float:
    return iterate(ctx.lam, z_first(ctx, r), j)


def check_window(ctx: RecurrenceCtx, r: float) -> None:
    hi = critical_radii(ctx).r_upper
    if not (2.0 <= r <= hi):
        raise RadiusOutOfWindow(f"r = {r} outside [2, r*] = [2, {hi}] at lam = {ctx.lam}")


def z_seq(ctx: RecurrenceCtx, r: float, j: int) -> float:
    """``z_j(r)`` on the window ``2 <= r <= r*`` where the sequence is monotone."""
    check_window(ctx, r)
    return z_closed(ctx, r, j)


def root_value(ctx: RecurrenceCtx, h: int, q1: int, q2: int, r1: float, r2: float) -> float:
    """Diagonal value at the branching vertex of member ``[h, q1, q2]`` at ``-lam``.

    Iterated sequences are used so the value stays meaningful outside the
    monotonicity window too.
    """
    if min(h, q1, q2) < 1:
        raise ValueError("indices start at 1")
    if not r2 > r1 >= 2:
        raise ValueError(f"need r2 > r1 >= 2, got r1={r1}, r2={r2}")
    lam = ctx.lam
    a = iterate(lam, -lam, h)
    b = iterate(lam, z_first(ctx, r1), q1)
    c = iterate(lam, z_first(ctx, r2), q2)
    return -lam - 1.0 / a - 1.0 / b - 1.0 / c


def a_values(lam: float, jmax: int) -> list[float]:
    """``[a_1, ..., a_jmax]`` by iteration (any ``lam``)."""
    return iterate_all(lam, -lam, jmax)


def z_values(lam: float, r: float, jmax: int) -> list[float]:
    """``[z_1(r), ..., z_jmax(r)]`` by iteration (any ``lam``)."""
    a2 = -lam + 1.0 / lam
    return iterate_all(lam, -lam - r / a2, jmax)
