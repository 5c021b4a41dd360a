"""Members of the three-branch family and related constructions.

A member ``[h, q1, q2]`` is a vertex ``u`` carrying three pendant branches:

* a bare path of ``h`` vertices,
* a path of ``q1`` vertices whose far end is the center of a sun with ``r1`` rays,
* a path of ``q2`` vertices whose far end is the center of a sun with ``r2`` rays,

where a ray is a pendant path of two vertices.  Vertex numbering is canonical:
``u = 0``, then the bare path (nearest ``u`` first), then the ``q1`` path, then
its rays as (middle, leaf) pairs, then the ``q2`` path and its rays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .tree import Tree, build_tree


class FamilyError(ValueError):
    pass


class BadTriple(FamilyError):
    pass


class BadParam(FamilyError):
    pass


class ConstraintError(FamilyError):
    pass


class NotationError(FamilyError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class FamilyCtx:
    n: int
    r1: int
    r2: int

    def __post_init__(self):
        if not self.r2 > self.r1 >= 2:
            raise ConstraintError(f"need r2 > r1 >= 2, got r1={self.r1}, r2={self.r2}")
        if self.n < 7 + 2 * (self.r1 + self.r2):
            raise ConstraintError(
                f"n={self.n} too small for r1={self.r1}, r2={self.r2} "
                f"(minimum {7 + 2 * (self.r1 + self.r2)})"
            )

    @property
    def path_total(self) -> int:
        """``h + q1 + q2`` shared by every member."""
        return self.n - 1 - 2 * (self.r1 + self.r2)

    @property
    def h0(self) -> int:
        return self.n - 5 - 2 * (self.r1 + self.r2)

    @property
    def size(self) -> int:
        return comb(self.h0, 2)


class Triple(NamedTuple):
    h: int
    q1: int
    q2: int

    def __str__(self) -> str:
        return f"[{self.h},{self.q1},{self.q2}]"


def check_triple(ctx: FamilyCtx, t: Triple) -> Triple:
    t = Triple(*t)
    if min(t) < 2:
        raise BadTriple(f"{t}: every coordinate must be >= 2")
    if sum(t) != ctx.path_total:
        raise BadTriple(f"{t}: coordinates sum to {sum(t)}, family needs {ctx.path_total}")
    return t


def _attach_path(edges: list, start: int, anchor: int, length: int) -> list[int]:
    """Hang a path of ``length`` new vertices ``start..`` off ``anchor``."""
    verts = list(range(start, start + length))
    prev = anchor
    for v in verts:
        edges.append((prev, v))
        prev = v
    return verts


def make_member(ctx: FamilyCtx, t) -> Tree:
    t = check_triple(ctx, t)
    edges: list[tuple[int, int]] = []
    nxt = 1
    central = _attach_path(edges, nxt, 0, t.h)
    nxt += t.h
    roles = {"u": 0, "end": central[-1]}
    for key, q, r in (("sun1", t.q1, ctx.r1), ("sun2", t.q2, ctx.r2)):
        branch = _attach_path(edges, nxt, 0, q)
        nxt += q
        center = branch[-1]
        roles[key] = center
        for _ in range(r):
            _attach_path(edges, nxt, center, 2)
            nxt += 2
    assert nxt == ctx.n
    return build_tree(ctx.n, edges, roles)


def enumerate_family(ctx: FamilyCtx) -> list[Triple]:
    """All members, largest index first (ascending ``q2``, then ascending ``q1``)."""
    s = ctx.path_total
    out = []
    for q2 in range(2, s - 3):
        for q1 in range(2, s - q2 - 1):
            out.append(Triple(s - q1 - q2, q1, q2))
    return out


def extremal_members(ctx: FamilyCtx) -> tuple[Triple, Triple]:
    h0 = ctx.h0
    return Triple(h0, 2, 2), Triple(2, 2, h0)


def make_Tj(r2: int, j: int) -> Tree:
    """Starlike tree: center with ``r2`` legs of two vertices and one leg of ``j``."""
    if r2 < 2 or j < 3:
        raise BadParam(f"need r2 >= 2 and j >= 3, got r2={r2}, j={j}")
    edges: list[tuple[int, int]] = []
    nxt = 1
    for _ in range(r2):
        _attach_path(edges, nxt, 0, 2)
        nxt += 2
    leg = _attach_path(edges, nxt, 0, j)
    return build_tree(1 + 2 * r2 + j, edges, {"u": 0, "end": leg[-1]})


@dataclass(frozen=True)
class GSpec:
    base: Tree
    attach: int
    q1: int
    q2: int


def make_G_member(spec: GSpec) -> Tree:
    """``spec.base`` with pendant paths of ``q1`` and ``q2`` vertices hung at ``attach``."""
    if spec.q1 < 2 or spec.q2 < 2:
        raise BadParam(f"pendant paths need >= 2 vertices, got {spec.q1}, {spec.q2}")
    if not (0 <= spec.attach < spec.base.n):
        raise BadParam(f"attach vertex {spec.attach} not in base tree")
    n0 = spec.base.n
    edges = list(spec.base.edges)
    _attach_path(edges, n0, spec.attach, spec.q1)
    _attach_path(edges, n0 + spec.q1, spec.attach, spec.q2)
    return build_tree(n0 + spec.q1 + spec.q2, edges, {"u": spec.attach})


# -- notation ---------------------------------------------------------------
#
# compact:  [h,q1,q2];r=(r1,r2);n=N
# long:     u + P<h>*S0 (+) P<q1>*S<r1> (+) P<q2>*S<r2>


class MemberSpec(NamedTuple):
    ctx: FamilyCtx
    triple: Triple


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def lit(self, s: str):
        self.ws()
        if not self.text.startswith(s, self.pos):
            raise NotationError(f"expected {s!r}", self.pos)
        self.pos += len(s)

    def int(self) -> int:
        self.ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise NotationError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group())

    def end(self):
        self.ws()
        if self.pos != len(self.text):
            raise NotationError("trailing input", self.pos)


def _member(n: int, r1: int, r2: int, t: Triple) -> MemberSpec:
    try:
        ctx = FamilyCtx(n, r1, r2)
        return MemberSpec(ctx, check_triple(ctx, t))
    except BadTriple as e:
        raise ConstraintError(str(e)) from None


def parse_notation(s: str) -> MemberSpec:
    sc = _Scanner(s)
    sc.ws()
    if s.startswith("[", sc.pos):
        sc.lit("[")
        h = sc.int()
        sc.lit(",")
        q1 = sc.int()
        sc.lit(",")
        q2 = sc.int()
        sc.lit("]")
        sc.lit(";")
        sc.lit("r")
        sc.lit("=")
        sc.lit("(")
        r1 = sc.int()
        sc.lit(",")
        r2 = sc.int()
        sc.lit(")")
        sc.lit(";")
        sc.lit("n")
        sc.lit("=")
        n = sc.int()
        sc.end()
        return _member(n, r1, r2, Triple(h, q1, q2))
    sc.lit("u")
    sc.lit("+")
    sc.lit("P")
    h = sc.int()
    sc.lit("*")
    sc.lit("S")
    at = sc.pos
    if sc.int() != 0:
        raise NotationError("central branch must carry S0", at)
    parts = []
    for _ in range(2):
        sc.lit("(+)")
        sc.lit("P")
        q = sc.int()
        sc.lit("*")
        sc.lit("S")
        parts.append((q, sc.int()))
    sc.end()
    (q1, r1), (q2, r2) = parts
    n = 1 + h + q1 + q2 + 2 * (r1 + r2)
    return _member(n, r1, r2, Triple(h, q1, q2))


def format_notation(spec: MemberSpec, style: str = "compact") -> str:
    ctx, t = spec
    if style == "compact":
        return f"[{t.h},{t.q1},{t.q2}];r=({ctx.r1},{ctx.r2});n={ctx.n}"
    if style == "long":
        return f"u + P{t.h}*S0 (+) P{t.q1}*S{ctx.r1} (+) P{t.q2}*S{ctx.r2}"
    raise ValueError(f"unknown style {style!r}")


def parse_triple(s: str) -> Triple:
    """``"[h,q1,q2]"`` -> Triple (no family check)."""
    sc = _Scanner(s)
    sc.lit("[")
    h = sc.int()
    sc.lit(",")
    q1 = sc.int()
    sc.lit(",")
    q2 = sc.int()
    sc.lit("]")
    sc.end()
    return Triple(h, q1, q2)
