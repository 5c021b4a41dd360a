from collections import Counter
from itertools import product
from math import comb

import pytest
from hypothesis import given

from treeswitch.family import (
    BadParam,
    BadTriple,
    ConstraintError,
    FamilyCtx,
    GSpec,
    MemberSpec,
    NotationError,
    Triple,
    enumerate_family,
    extremal_members,
    format_notation,
    make_G_member,
    make_member,
    make_Tj,
    parse_notation,
    parse_triple,
)
from treeswitch.tree import build_tree, canonical_form, degree_sequence, path, star

from conftest import contexts


def test_member_degrees(f23):
    t = make_member(f23, [8, 2, 2])
    assert t.n == 23
    assert Counter(degree_sequence(t)) == {4: 1, 3: 2, 2: 14, 1: 6}
    assert t.role("u") == 0 and t.degree(t.role("sun1")) == 3 and t.degree(t.role("sun2")) == 4


def test_member_rejects_bad_triple(f23):
    with pytest.raises(BadTriple):
        make_member(f23, [8, 2, 3])
    with pytest.raises(BadTriple):
        make_member(f23, [9, 1, 2])


@pytest.mark.parametrize("n, r1, r2", [(16, 2, 3), (23, 3, 3), (23, 3, 2), (30, 1, 3)])
def test_ctx_constraints(n, r1, r2):
    with pytest.raises(ConstraintError):
        FamilyCtx(n, r1, r2)


@pytest.mark.parametrize(
    "n, members",
    [(17, [(2, 2, 2)]), (18, [(3, 2, 2), (2, 3, 2), (2, 2, 3)])],
)
def test_small_families(n, members):
    assert sorted(enumerate_family(FamilyCtx(n, 2, 3))) == sorted(members)


def test_family_sizes(f23):
    assert len(enumerate_family(f23)) == 28 == f23.size
    assert extremal_members(f23) == ((8, 2, 2), (2, 2, 8))
    assert extremal_members(FamilyCtx(25, 2, 4)) == ((8, 2, 2), (2, 2, 8))
    assert extremal_members(FamilyCtx(17, 2, 3)) == ((2, 2, 2), (2, 2, 2))


@given(contexts)
def test_count_matches_brute_force(ctx):
    s = ctx.path_total
    brute = {t for t in product(range(2, s + 1), repeat=3) if sum(t) == s}
    assert set(enumerate_family(ctx)) == brute
    assert len(brute) == comb(ctx.n - 1 - 2 * (ctx.r1 + ctx.r2) - 4, 2)


@given(contexts)
def test_members_share_degree_multiset(ctx):
    seqs = {tuple(degree_sequence(make_member(ctx, t))) for t in enumerate_family(ctx)}
    assert len(seqs) == 1
    assert all(make_member(ctx, t).n == ctx.n for t in enumerate_family(ctx))


@given(contexts)
def test_notation_round_trip(ctx):
    for t in enumerate_family(ctx):
        spec = MemberSpec(ctx, t)
        assert parse_notation(format_notation(spec)) == spec
        assert parse_notation(format_notation(spec, "long")) == spec


def test_notation_examples():
    a = parse_notation("[8,2,2];r=(2,3);n=23")
    b = parse_notation("u + P8*S0 (+) P2*S2 (+) P2*S3")
    assert a == b == MemberSpec(FamilyCtx(23, 2, 3), Triple(8, 2, 2))
    assert str(a.triple) == "[8,2,2]"


def test_notation_errors():
    with pytest.raises(ConstraintError):
        parse_notation("[8,2,2];r=(3,2);n=23")
    with pytest.raises(ConstraintError):
        parse_notation("[8,2,3];r=(2,3);n=23")
    with pytest.raises(NotationError) as e:
        parse_notation("[8,2;r=(2,3);n=23")
    assert e.value.pos == 4
    with pytest.raises(NotationError):
        parse_notation("u + P8*S1 (+) P2*S2 (+) P2*S3")
    with pytest.raises(NotationError):
        parse_notation("[8,2,2];r=(2,3);n=23 extra")
    with pytest.raises(ValueError):
        format_notation(a_spec(), "latex")


def a_spec():
    return MemberSpec(FamilyCtx(23, 2, 3), Triple(8, 2, 2))


def test_parse_triple():
    assert parse_triple(" [5, 4,3] ") == (5, 4, 3)
    with pytest.raises(NotationError):
        parse_triple("5,4,3")


def test_Tj():
    t = make_Tj(3, 3)
    assert t.n == 10 and t.degree(0) == 4
    assert make_Tj(2, 3).degree(0) == 3
    with pytest.raises(BadParam):
        make_Tj(3, 2)


def test_G_members():
    p5 = make_G_member(GSpec(build_tree(1, []), 0, 2, 2))
    assert canonical_form(p5, 0) == canonical_form(path(5), 2)
    spider = make_G_member(GSpec(star(3), 0, 2, 3))
    assert spider.n == 9 and spider.degree(0) == 5
    with pytest.raises(BadParam):
        make_G_member(GSpec(star(3), 0, 1, 3))
    with pytest.raises(BadParam):
        make_G_member(GSpec(star(3), 7, 2, 3))
