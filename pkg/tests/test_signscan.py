import json
import math

import numpy as np
import pytest

from treeswitch.family import FamilyCtx, make_member
from treeswitch.signscan import (
    ClaimViolated,
    ExceptionCase,
    GridSpec,
    HSDirection,
    check_psi_decreasing,
    f_value,
    g_value,
    is_W_shape,
    junction_margin,
    on_internal_path,
    point_cloud_csv,
    psi,
    scan_f,
    scan_phi_sq,
    scan_psi_b,
    sun_value,
    verify_hoffman_smith,
    verify_Tj,
)
from treeswitch.tree import build_tree, path, sun

SMALL = GridSpec(r_hi=6.0, x_hi=8.0, r_step=0.25, x_step=0.25)


def test_sun_value_exact_points():
    assert sun_value(3.0, 2.0) ** 2 - 1 == pytest.approx(65 / 16, abs=1e-14)
    assert sun_value(2.0, 2.0) ** 2 - 1 == pytest.approx(-5 / 9, abs=1e-14)
    assert sun_value(5.0, 4.0) ** 2 - 1 > 0


def test_phi_boundary_r2():
    # on x = sqrt(r + 3) the claim holds for r = 2 and fails once r exceeds 2*sqrt(2)
    assert sun_value(math.sqrt(5), 2.0) ** 2 - 1 > 0
    assert sun_value(math.sqrt(6), 3.0) ** 2 - 1 < 0


def test_g_and_f_points():
    assert g_value(3.0, 2.0) > 0
    assert g_value(10.0, 50.0) > 0
    # the boundary point is negative: recorded as a failing case of the claim
    assert g_value(math.sqrt(5), 2.0) < 0
    for lam, r in [(math.sqrt(5), 2.0), (3.0, 2.0), (5.0, 10.0)]:
        assert f_value(lam, r) < 0


def test_junction_margin_tends_to_f():
    lam, r = np.array([2.4]), 2.0
    assert junction_margin(lam, r, 60)[0] == pytest.approx(f_value(lam, r)[0], abs=1e-12)
    with pytest.raises(ValueError):
        junction_margin(lam, r, 1)


def test_psi():
    assert psi(-2.0) == pytest.approx(-2 / 3)
    assert check_psi_decreasing()


def test_grid_points_respect_constraint():
    x, r = SMALL.points()
    assert np.all(x >= np.sqrt(r + 3) - 1e-12) and x.size == r.size
    with pytest.raises(ValueError):
        GridSpec(r_step=0)


def test_scan_reports():
    rep = scan_f(SMALL, h0_max=20)
    assert rep.ok and rep.points > 0 and "no violation found" in rep.summary()
    assert json.loads(rep.to_json())["claim"] == "f < 0"
    assert scan_psi_b(3, SMALL).ok
    bad = scan_phi_sq(SMALL)
    assert not bad.ok and any("(2, 2)" in n for n in bad.notes)
    with pytest.raises(ClaimViolated):
        bad.raise_if_violated()


def test_point_cloud_csv():
    rep, (t, r, v) = scan_phi_sq(SMALL, with_points=True)
    text = point_cloud_csv(("t", "r"), (t, r), v)
    assert text.splitlines()[0] == "t,r,value"
    assert len(text.splitlines()) == t.size + 1


def test_verify_Tj(f23):
    assert verify_Tj(f23, [8, 2, 2]).ok
    assert verify_Tj(f23, [2, 2, 8]).ok
    with pytest.raises(ValueError):
        verify_Tj(f23, [8, 2, 2], j_min=2)


def test_hoffman_smith_examples(f23):
    t = make_member(f23, [8, 2, 2])
    e = (0, 9)  # u to the first vertex of the q1 branch
    assert on_internal_path(t, e)
    assert verify_hoffman_smith(t, e) is HSDirection.DECREASED
    assert verify_hoffman_smith(path(3), (1, 2)) is HSDirection.INCREASED
    assert verify_hoffman_smith(sun(2), (1, 2)) is HSDirection.INCREASED


def test_W_shape_exception():
    # two degree-3 vertices joined by a path, each with two leaves: n = 8, distance 3
    w = build_tree(8, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (5, 7)])
    assert is_W_shape(w)
    with pytest.raises(ExceptionCase):
        verify_hoffman_smith(w, (3, 4))
