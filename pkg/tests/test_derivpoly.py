from __future__ import annotations

import math

import pytest

import squigonometry as sg
from squigonometry import (
    DomainError,
    ParameterError,
    RootSet,
    SquigParams,
    band_limits,
)

COSQUINE4 = SquigParams(p=4, m=1, n=0)
SQUINE6 = SquigParams(p=6, m=0, n=1)


def test_q_polynomial_dense_view():
    tri = sg.build_triangle(COSQUINE4, 6)
    q4 = sg.q_polynomial(tri, 4)
    assert q4.coeffs == (0, 6, 81, 18, 0)
    assert q4.k == 4
    with pytest.raises(ParameterError):
        sg.q_polynomial(tri, 7)


@pytest.mark.parametrize("p,m,n", [(2, 0, 1), (3, 1, 0), (4, 1, 0), (4, 2, 1), (6, 0, 1)])
def test_polynomial_step_reproduces_triangle(p, m, n):
    params = SquigParams(p=p, m=m, n=n)
    tri = sg.build_triangle(params, 12)
    q = sg.q_polynomial(tri, 0)
    for k in range(12):
        q = sg.polynomial_step(q)
        want = sg.q_polynomial(tri, k + 1)
        assert q.coeffs == want.coeffs


def test_kth_derivative_matches_finite_differences(ctx4):
    # Central differences of cq^2 sq against triangle rows 1..3.
    params = SquigParams(p=4, m=2, n=1)
    tri = sg.build_triangle(params, 3)

    def f(t: float) -> float:
        return sg.cq(ctx4, t) ** 2 * sg.sq(ctx4, t)

    # Step sizes balance truncation (h^2) against roundoff (ulp / h^order).
    for t in (0.4, 0.9, 1.3):
        h = 1e-6
        d1 = (f(t + h) - f(t - h)) / (2 * h)
        h = 1e-4
        d2 = (f(t + h) - 2 * f(t) + f(t - h)) / (h * h)
        h = 1e-3
        d3 = (f(t + 2 * h) - 2 * f(t + h) + 2 * f(t - h) - f(t - 2 * h)) / (2 * h ** 3)
        assert sg.kth_derivative_value(ctx4, tri, 1, t) == pytest.approx(d1, abs=1e-9)
        assert sg.kth_derivative_value(ctx4, tri, 2, t) == pytest.approx(d2, abs=1e-6)
        assert sg.kth_derivative_value(ctx4, tri, 3, t) == pytest.approx(d3, abs=1e-3)


def test_kth_derivative_order_zero_and_one_exact(ctx4):
    params = SquigParams(p=4, m=0, n=1)
    tri = sg.build_triangle(params, 1)
    for t in (0.3, 1.0):
        assert sg.kth_derivative_value(ctx4, tri, 0, t) == pytest.approx(
            sg.sq(ctx4, t), abs=1e-15
        )
        # sq' = cq^(p-1)
        assert sg.kth_derivative_value(ctx4, tri, 1, t) == pytest.approx(
            sg.cq(ctx4, t) ** 3, abs=1e-15
        )


def test_kth_derivative_guards(ctx4, ctx3):
    tri = sg.build_triangle(COSQUINE4, 4)
    with pytest.raises(ParameterError):
        sg.kth_derivative_value(ctx3, tri, 2, 0.5)
    with pytest.raises(DomainError):
        sg.kth_derivative_value(ctx4, tri, 2, 0.0)
    with pytest.raises(DomainError):
        sg.kth_derivative_value(ctx4, tri, 2, 2.0 * ctx4.quarter)


def test_root_counts_match_band_widths():
    for params in (COSQUINE4, SQUINE6, SquigParams(p=3, m=1, n=0)):
        ladder = sg.root_ladder(params, 15)
        for k, rs in enumerate(ladder):
            j_lo, j_hi = band_limits(params, k)
            assert rs.zero_multiplicity == j_lo
            assert len(rs.negative_roots) == j_hi - j_lo
            assert all(r < 0.0 for r in rs.negative_roots)


def test_known_root_cosquine4_level3():
    # Q_3 for the 4-cosquine is 3u(2 + 3u): single root -2/3.
    ladder = sg.root_ladder(COSQUINE4, 3)
    rs = ladder[3]
    assert rs.zero_multiplicity == 1
    assert len(rs.negative_roots) == 1
    assert rs.negative_roots[0] == pytest.approx(-2.0 / 3.0, abs=1e-14)


def test_known_roots_squine6_level4():
    # Level-4 squine roots for p = 6 solve 12u^2 + 85u + 20 = 0 up to the
    # deflated factor: (-85 +/- sqrt(6265)) / 24.
    ladder = sg.root_ladder(SQUINE6, 4)
    rs = ladder[4]
    lo = (-85.0 - math.sqrt(6265.0)) / 24.0
    hi = (-85.0 + math.sqrt(6265.0)) / 24.0
    assert len(rs.negative_roots) == 2
    assert rs.negative_roots[0] == pytest.approx(lo, abs=1e-12)
    assert rs.negative_roots[1] == pytest.approx(hi, abs=1e-12)


def test_interlacing_along_ladders():
    for params in (COSQUINE4, SQUINE6, SquigParams(p=3, m=2, n=1), SquigParams(p=4, m=1, n=1)):
        ladder = sg.root_ladder(params, 20)
        for lower, upper in zip(ladder, ladder[1:]):
            assert sg.interlacing_check(lower, upper), (params, upper.k)


def test_interlacing_rejects_bad_sets():
    a = RootSet(k=4, zero_multiplicity=1, negative_roots=(-3.0, -1.0))
    # Two roots of the same level adjacent after merging.
    b = RootSet(k=5, zero_multiplicity=1, negative_roots=(-0.5, -0.25))
    assert not sg.interlacing_check(a, b)
    # Count gap of two.
    c = RootSet(k=5, zero_multiplicity=1, negative_roots=())
    assert not sg.interlacing_check(a, c)
    # Nonnegative root.
    d = RootSet(k=5, zero_multiplicity=1, negative_roots=(-2.0, 0.0))
    assert not sg.interlacing_check(a, d)
    # Closer than min_gap.
    e = RootSet(k=5, zero_multiplicity=1, negative_roots=(-3.0 + 1e-13, -0.5))
    assert not sg.interlacing_check(a, e)
    # A valid interlace passes.
    f = RootSet(k=5, zero_multiplicity=1, negative_roots=(-4.0, -2.0, -0.5))
    assert sg.interlacing_check(a, f)


def test_real_roots_single_level():
    tri = sg.build_triangle(COSQUINE4, 3)
    rs = sg.real_roots(sg.q_polynomial(tri, 3))
    assert rs.negative_roots[0] == pytest.approx(-2.0 / 3.0, abs=1e-14)


def test_algebraic_values_land_on_curve(ctx4):
    ladder = sg.root_ladder(COSQUINE4, 10)
    for rs in ladder:
        for u in rs.negative_roots:
            cq_val, sq_val = sg.algebraic_values(u, 4)
            assert abs(cq_val ** 4 + sq_val ** 4 - 1.0) <= 5e-15
            assert 0.0 < cq_val <= 1.0 and 0.0 <= sq_val < 1.0


def test_algebraic_values_at_known_root(ctx4):
    # At the level-3 root of the 4-cosquine the second derivative of cq
    # vanishes; check by locating t with arcsq and differencing cq'.
    cq_val, sq_val = sg.algebraic_values(-2.0 / 3.0, 4)
    t_star = sg.arcsq_oracle(sq_val, 4)
    assert sg.cq(ctx4, t_star) == pytest.approx(cq_val, abs=1e-10)
    tri = sg.build_triangle(COSQUINE4, 3)
    assert sg.kth_derivative_value(ctx4, tri, 3, t_star) == pytest.approx(0.0, abs=1e-9)


def test_algebraic_values_origin():
    cq_val, sq_val = sg.algebraic_values(0.0, 4)
    assert (cq_val, sq_val) == (1.0, 0.0)


def test_algebraic_values_validation():
    with pytest.raises(DomainError):
        sg.algebraic_values(0.5, 4)
    with pytest.raises(ParameterError):
        sg.algebraic_values(-1.0, 1)


def test_critical_value_balanced_product():
    # m = n: maximum of (cq sq)^m is 2^(-2m/p).
    assert sg.critical_value(SquigParams(p=4, m=1, n=1)) == pytest.approx(
        2.0 ** -0.5, abs=1e-15
    )
    assert sg.critical_value(SquigParams(p=2, m=1, n=1)) == pytest.approx(0.5, abs=1e-15)


def test_critical_value_matches_grid_maximum(ctx4):
    params = SquigParams(p=4, m=2, n=1)
    want = sg.critical_value(params)
    half = 2.0 * ctx4.quarter
    grid = max(
        sg.cq(ctx4, i * half / 2000.0) ** 2 * sg.sq(ctx4, i * half / 2000.0)
        for i in range(1, 2000)
    )
    assert grid <= want + 1e-12
    assert grid == pytest.approx(want, abs=1e-5)


def test_critical_value_validation():
    with pytest.raises(ParameterError):
        sg.critical_value(SquigParams(p=4, m=0, n=1))


def test_root_ladder_validation():
    with pytest.raises(ParameterError):
        sg.root_ladder(SquigParams(p=4, m=-1, n=1), 4)
    with pytest.raises(ParameterError):
        sg.root_ladder(COSQUINE4, -1)
