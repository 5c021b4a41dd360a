"""Total index ordering of a family: comparator, catalog, switch classification."""

from __future__ import annotations

import csv
import enum
import functools
import io
import json
from dataclasses import dataclass, field

from .diagonalize import Comparison, compare_index, spectral_radius
from .family import FamilyCtx, Triple, check_triple, enumerate_family, make_member
from .switches import replay


class MonotonicityViolation(AssertionError):
    pass


class NotInFamily(ValueError):
    pass


class Order(enum.Enum):
    SUCC = "Succ"
    PREC = "Prec"
    EQUAL = "Equal"


class SwitchEffect(enum.Enum):
    INCREASE = "IndexIncrease"
    DECREASE = "IndexDecrease"
    SAME = "Same"


def invlex_compare(a, b) -> Order:
    """``a`` succeeds ``b`` iff ``b.q2 > a.q2``, or ``q2`` ties and ``b.q1 > a.q1``."""
    a, b = Triple(*a), Triple(*b)
    if (a.q2, a.q1) == (b.q2, b.q1):
        return Order.EQUAL
    if b.q2 > a.q2 or (b.q2 == a.q2 and b.q1 > a.q1):
        return Order.SUCC
    return Order.PREC


def catalog_words(ctx: FamilyCtx) -> list[tuple[str, Triple]]:
    """Gamma-blocks of alpha-runs from ``[h0, 2, 2]``, in that order."""
    h0 = ctx.h0
    out = []
    for j in range(h0 - 1):
        for k in range(h0 - 1 - j):
            word = "g" * j + "a" * k
            out.append((word, replay(word, Triple(h0, 2, 2))[-1]))
    return out


@dataclass(frozen=True)
class CatalogRow:
    rank: int
    word: str
    triple: Triple
    index_lo: float
    index_hi: float


@dataclass
class Catalog:
    ctx: FamilyCtx
    rows: list[CatalogRow]
    # certificate for rows k -> k+1: "bracket" or "exact"
    certificates: list[str] = field(default_factory=list)

    def rank_of(self, t) -> int:
        t = Triple(*t)
        for row in self.rows:
            if row.triple == t:
                return row.rank
        raise NotInFamily(f"{t} not in catalog")

    def to_csv(self, digits: int = 12) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank", "word", "h", "q1", "q2", "index_lo", "index_hi"])
        for r in self.rows:
            w.writerow(
                [r.rank, r.word, *r.triple, f"{r.index_lo:.{digits}g}", f"{r.index_hi:.{digits}g}"]
            )
        return buf.getvalue()

    def to_json(self, digits: int = 12) -> str:
        return json.dumps(
            {
                "n": self.ctx.n,
                "r1": self.ctx.r1,
                "r2": self.ctx.r2,
                "rows": [
                    {
                        "rank": r.rank,
                        "word": r.word,
                        "triple": list(r.triple),
                        "index_lo": float(f"{r.index_lo:.{digits}g}"),
                        "index_hi": float(f"{r.index_hi:.{digits}g}"),
                    }
                    for r in self.rows
                ],
                "certificates": self.certificates,
            },
            indent=1,
        )


def certify_decrease(ctx: FamilyCtx, upper: CatalogRow, lower: CatalogRow, tol: float) -> str:
    """Certify ``rho(upper) > rho(lower)``; returns how it was certified."""
    if lower.index_hi < upper.index_lo:
        return "bracket"
    t1 = make_member(ctx, upper.triple)
    t2 = make_member(ctx, lower.triple)
    if compare_index(t1, t2, tol, exact=True) is Comparison.GREATER:
        return "exact"
    raise MonotonicityViolation(
        f"could not certify rho({upper.triple}) > rho({lower.triple}) at tol={tol}"
    )


def build_catalog(ctx: FamilyCtx, tol: float = 1e-12) -> Catalog:
    rows = []
    for rank, (word, t) in enumerate(catalog_words(ctx), start=1):
        lo, hi = spectral_radius(make_member(ctx, t), tol)
        rows.append(CatalogRow(rank, word, t, lo, hi))
    cat = Catalog(ctx, rows)
    for upper, lower in zip(rows, rows[1:]):
        cat.certificates.append(certify_decrease(ctx, upper, lower, tol))
    return cat


def classify_switch(ctx: FamilyCtx, src, dst) -> SwitchEffect:
    """Effect of moving from ``src`` to ``dst`` on the index, read off the total order."""
    try:
        src, dst = check_triple(ctx, src), check_triple(ctx, dst)
    except ValueError as e:
        raise NotInFamily(str(e)) from None
    o = invlex_compare(src, dst)
    if o is Order.EQUAL:
        return SwitchEffect.SAME
    return SwitchEffect.DECREASE if o is Order.SUCC else SwitchEffect.INCREASE


def gamma_junction_pair(ctx: FamilyCtx, j: int) -> tuple[Triple, Triple]:
    """Last tree of gamma-block ``j`` and first tree of block ``j + 1``."""
    h0 = ctx.h0
    if not 0 <= j <= h0 - 3:
        raise ValueError(f"junction index must lie in 0..{h0 - 3}, got {j}")
    return Triple(2, h0 - j, 2 + j), Triple(h0 - j - 1, 2, 3 + j)


def verify_gamma_junction(ctx: FamilyCtx, j: int, tol: float = 1e-10) -> bool:
    hi_t, lo_t = gamma_junction_pair(ctx, j)
    res = compare_index(make_member(ctx, hi_t), make_member(ctx, lo_t), tol)
    if res is Comparison.INCONCLUSIVE:
        res = compare_index(make_member(ctx, hi_t), make_member(ctx, lo_t), tol, exact=True)
    return res is Comparison.GREATER


def sorted_by_invlex(ctx: FamilyCtx) -> list[Triple]:
    """Members sorted largest-first by the comparator alone."""

    def key(a, b):
        o = invlex_compare(a, b)
        return 0 if o is Order.EQUAL else (-1 if o is Order.SUCC else 1)

    return sorted(enumerate_family(ctx), key=functools.cmp_to_key(key))
