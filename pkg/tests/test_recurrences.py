import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeswitch.acceptance import acceptance_contexts, recurrence_agreement
from treeswitch.diagonalize import spectral_radius
from treeswitch.family import enumerate_family, make_member
from treeswitch.recurrences import (
    AtPole,
    LambdaOutOfRange,
    RadiusOutOfWindow,
    a_closed,
    a_iter,
    a_values,
    beta_coeff,
    critical_radii,
    make_ctx,
    phi,
    root_value,
    z_closed,
    z_first,
    z_iter,
    z_seq,
)

LAMS = [round(2.01 + 0.01 * i, 2) for i in range(800)]


def test_exact_half_integer_context():
    c = make_ctx(2.5)
    assert c.theta == -2.0 and c.a2 == pytest.approx(-2.1, abs=1e-15)
    cr = critical_radii(c)
    assert cr.r_lower == pytest.approx(1.05, abs=1e-14)
    assert cr.r_upper == pytest.approx(4.2, abs=1e-14)
    assert beta_coeff(c, 2) == pytest.approx(11 / 19, abs=1e-14)
    assert beta_coeff(c, cr.r_upper) == pytest.approx(0, abs=1e-14)
    assert z_first(c, 2) == pytest.approx(float(Fraction(-65, 42)), abs=1e-15)


def test_lambda_boundary():
    with pytest.raises(LambdaOutOfRange):
        make_ctx(2)
    assert make_ctx(2.05).theta + 1 / make_ctx(2.05).theta == pytest.approx(-2.05, abs=1e-12)


def test_a_first_terms():
    c = make_ctx(2.5)
    assert a_closed(c, 1) == pytest.approx(-2.5, abs=1e-14)
    assert a_closed(c, 2) == pytest.approx(-2.1, abs=1e-14)
    assert a_closed(c, 200) == pytest.approx(-2.0, abs=1e-14)
    assert z_closed(c, 2, 200) == pytest.approx(-2.0, abs=1e-14)


def test_pole_and_window():
    c = make_ctx(2.5)
    with pytest.raises(AtPole):
        beta_coeff(c, 1.05)
    with pytest.raises(RadiusOutOfWindow):
        z_seq(c, 5.0, 3)
    with pytest.raises(RadiusOutOfWindow):
        z_seq(c, 1.5, 3)
    assert z_seq(c, 3.0, 4) == pytest.approx(z_iter(c, 3.0, 4), abs=1e-13)


@pytest.mark.parametrize("lam", LAMS[::7])
def test_fixed_point(lam):
    c = make_ctx(lam)
    assert abs(phi(lam, c.theta) - c.theta) <= 1e-12


def test_theta_decreasing_in_lambda():
    th = [make_ctx(lam).theta for lam in LAMS]
    assert all(b < a for a, b in zip(th, th[1:]))


@given(st.floats(2.01, 10), st.integers(1, 60))
def test_z_recurrence_step(lam, j):
    c = make_ctx(lam)
    assert z_iter(c, 3.0, j + 1) == pytest.approx(phi(lam, z_iter(c, 3.0, j)), abs=1e-15)


@pytest.mark.parametrize("lam", [2.01, 2.1, 2.5, 4.0, 10.0])
def test_a_increasing_to_theta(lam):
    c = make_ctx(lam)
    a = a_values(lam, 60)
    assert all(x < y for x, y in zip(a, a[1:]) if y - x > 1e-15)
    assert all(x <= c.theta + 1e-15 for x in a)
    if lam >= 2.1:
        assert abs(a[-1] - c.theta) < 1e-6


@pytest.mark.parametrize("lam", [2.1, 2.3, 2.5, 3.0, 5.0])
def test_z_decreasing_inside_window(lam):
    c = make_ctx(lam)
    cr = critical_radii(c)
    lo = max(2.0, cr.r_lower)
    for r in np.linspace(lo, cr.r_upper, 7)[1:-1]:
        z = [z_iter(c, r, j) for j in range(1, 61)]
        assert all(y < x for x, y in zip(z, z[1:]) if x - y > 1e-15)
        assert all(v >= c.theta - 1e-15 for v in z)
        assert abs(z[-1] - c.theta) < 1e-6


def test_closed_forms_agree_off_critical_radius():
    worst = recurrence_agreement(LAMS)
    for key in ("a", "z(r=2)", "z(r=3)", "z(r=5)"):
        assert worst[key][0] <= 1e-12, key


def test_closed_form_at_critical_radius_is_repelling_fixed_point():
    # beta(r*) = 0, so the closed form is the constant 1/theta; iteration drifts
    # away from that repelling point at rate theta^2 per step
    c = make_ctx(2.5)
    r = critical_radii(c).r_upper
    assert z_closed(c, r, 10) == pytest.approx(1 / c.theta, abs=1e-12)
    assert z_iter(c, r, 3) == pytest.approx(1 / c.theta, abs=1e-12)


def test_b1_below_minus_one_for_r1_two():
    lam = np.arange(math.sqrt(5), 50, 0.001)
    b1 = -lam - 2 / (-lam + 1 / lam)
    assert np.all(b1 < -1)


def test_b1_below_minus_one_at_member_index():
    for ctx in acceptance_contexts():
        for tr in enumerate_family(ctx)[::5]:
            lo, hi = spectral_radius(make_member(ctx, tr))
            assert z_first(make_ctx((lo + hi) / 2), ctx.r1) < -1


def test_chain_of_radii_at_member_index():
    for ctx in acceptance_contexts():
        for tr in enumerate_family(ctx):
            lo, hi = spectral_radius(make_member(ctx, tr))
            cr = critical_radii(make_ctx((lo + hi) / 2))
            assert cr.r_lower < ctx.r1 < ctx.r2 <= cr.r_upper


def test_root_value_signs(f23):
    lo, hi = spectral_radius(make_member(f23, [8, 2, 2]))
    c = make_ctx((lo + hi) / 2)
    assert abs(root_value(c, 8, 2, 2, 2, 3)) < 1e-9
    assert root_value(c, 7, 3, 2, 2, 3) < 0
    lo, hi = spectral_radius(make_member(f23, [2, 2, 8]))
    assert root_value(make_ctx((lo + hi) / 2), 8, 2, 2, 2, 3) > 0


def test_root_value_preconditions():
    c = make_ctx(2.5)
    with pytest.raises(ValueError):
        root_value(c, 0, 2, 2, 2, 3)
    with pytest.raises(ValueError):
        root_value(c, 2, 2, 2, 3, 2)


def test_a_iter_matches_values():
    c = make_ctx(3.0)
    assert a_iter(c, 5) == a_values(3.0, 5)[-1]
