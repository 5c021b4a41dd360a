"""Triple-level moves between family members and their edge-level 2-switches.

``a`` (alpha) moves one vertex from the bare path to the ``q1`` branch, ``g``
(gamma) moves one to the ``q2`` branch, ``b`` (beta) moves one from the ``q1``
branch to the ``q2`` branch.  Words are strings over ``{a, b, g}`` applied left
to right.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .family import FamilyCtx, Triple, check_triple, make_member
from .tree import Tree, apply_2switch, canonical_form, degree_sequence


class DomainViolation(ValueError):
    pass


class Unreachable(ValueError):
    pass


class TransformKind(enum.Enum):
    ALPHA = "a"
    BETA = "b"
    GAMMA = "g"


_DELTA = {
    TransformKind.ALPHA: (-1, 1, 0),
    TransformKind.BETA: (0, -1, 1),
    TransformKind.GAMMA: (-1, 0, 1),
}


def apply_transform(t: Triple, k: TransformKind | str) -> Triple:
    k = TransformKind(k)
    out = Triple(*(x + d for x, d in zip(t, _DELTA[k])))
    if min(out) < 2:
        raise DomainViolation(f"{k.name.lower()} is not defined on {Triple(*t)}")
    return out


def replay(word: str, start: Triple) -> list[Triple]:
    """Every intermediate triple of ``word`` applied to ``start`` (start included)."""
    seq = [Triple(*start)]
    for ch in word:
        seq.append(apply_transform(seq[-1], ch))
    return seq


@dataclass(frozen=True)
class SwitchRealization:
    before: Tree
    after: Tree
    removed: tuple
    added: tuple
    target: Triple


def _branches(ctx: FamilyCtx, t: Triple) -> tuple[list[int], list[int], list[int]]:
    """Vertex ids of the bare path and the two sun branches, nearest ``u`` first."""
    h, q1, q2 = t
    central = list(range(1, 1 + h))
    b1 = list(range(1 + h, 1 + h + q1))
    start2 = 1 + h + q1 + 2 * ctx.r1
    b2 = list(range(start2, start2 + q2))
    return central, b1, b2


def realize_switch(ctx: FamilyCtx, t, k: TransformKind | str) -> SwitchRealization:
    """Carry out ``k`` on the canonical tree of ``t`` as a genuine 2-switch.

    Both branches involved are cut next to ``u``: the donor after its second
    vertex, the receiver after its first, and the loose ends are cross-joined.
    The resulting labeled tree is checked against the canonical member of the
    target triple by rooted-tree isomorphism at ``u``.
    """
    t = check_triple(ctx, t)
    k = TransformKind(k)
    target = check_triple(ctx, apply_transform(t, k))
    before = make_member(ctx, t)
    central, b1, b2 = _branches(ctx, t)
    donor, receiver = {
        TransformKind.ALPHA: (central, b1),
        TransformKind.GAMMA: (central, b2),
        TransformKind.BETA: (b1, b2),
    }[k]
    # remove (d2, d3) and (r2, r1); add (d2, r2) and (d3, r1)
    ab = (donor[1], donor[2])
    cd = (receiver[1], receiver[0])
    after = apply_2switch(before, ab, cd)
    if degree_sequence(after) != degree_sequence(before):
        raise AssertionError("2-switch changed the degree sequence")
    expect = make_member(ctx, target)
    if canonical_form(after, 0) != canonical_form(expect, 0):
        raise AssertionError(f"switch on {t} did not produce {target}")
    return SwitchRealization(
        before, after, (ab, cd), ((ab[0], cd[0]), (ab[1], cd[1])), target
    )


def decompose(ctx: FamilyCtx, target, basis: str = "ab") -> str:
    """Word over ``{a,b}`` or ``{a,g}`` taking ``[h0,2,2]`` to ``target``."""
    target = check_triple(ctx, target)
    h, q1, q2 = target
    if basis == "ab":
        word = "a" * (ctx.h0 - h) + "b" * (q2 - 2)
    elif basis == "ag":
        word = "a" * (q1 - 2) + "g" * (q2 - 2)
    else:
        raise ValueError(f"basis must be 'ab' or 'ag', got {basis!r}")
    try:
        end = replay(word, Triple(ctx.h0, 2, 2))[-1]
    except DomainViolation as e:
        raise Unreachable(str(e)) from None
    if end != target:
        raise Unreachable(f"{word!r} reaches {end}, not {target}")
    return word


def general_type2(ctx: FamilyCtx, t, s: int, tt: int) -> Triple:
    """Type II ``(s, t)`` switch: ``[h, q1, q2] -> [h, q2 + t - s, q1 - t + s]``."""
    h, q1, q2 = check_triple(ctx, t)
    if not (1 <= s <= q2 and 1 <= tt <= q1 - 1):
        raise DomainViolation(f"cut positions s={s}, t={tt} out of range for {t}")
    out = Triple(h, q2 + tt - s, q1 - tt + s)
    if min(out) < 2:
        raise DomainViolation(f"(s={s}, t={tt}) leaves a branch shorter than 2: {out}")
    return out
