"""Packing-constant bounds: formula anchors, grid monotonicity, and the
independently recomputed error-term assembly."""

import math

import numpy as np
import pytest

from normeuclid.rogers import (
    RogersContext,
    c_poly,
    central_integral,
    error_constants,
    f_lower,
    leech_gap,
    sigma_lower_log,
    sigma_upper_log,
    u_threshold,
)
from normeuclid.specfun import BracketError, DomainError

SQRT_PI = math.sqrt(math.pi)

KAPPA_GRID = (24.0, 50.0, 100.0, 176.0, 400.0, 1000.0)
THETA_GRID = (0.05, 0.1, 0.3)


def _constants_oracle(kappa, theta):
    """The five error constants written out independently, operand order
    double-checked against the definitions."""
    kt1 = kappa ** (theta - 1)
    kt2 = kappa ** (2 * theta - 2)
    kt3 = kappa ** (3 * theta - 3)
    c1 = 0.125 * (
        2 * SQRT_PI * math.sqrt(1 + kt2) / math.e
        + (6 / kappa) * (1 + math.sqrt(1 + kt2) / math.e)
        + 3 / kappa ** 3
    )
    c2 = (1 / (1 - kt1)) * (1 / (1 - kt1 / 4) + 2.5)
    c3 = math.sqrt(1 + kt2 / 4)
    c41 = c3 + kt3 * c2 * c3 + kt1 / 4
    c42 = c2 * (1 - 1 / (2 * kappa ** 2))
    return c1, c2, c3, c41, c42


# ------------------------------------------------------------------ types

def test_context_validation():
    ctx = RogersContext(62238.0, 0.1)
    assert abs(2.0 * ctx.kappa ** 2 - 62238.0) <= 1e-12 * 62238.0
    with pytest.raises(DomainError):
        RogersContext(100.0, 0.34)
    with pytest.raises(DomainError):
        RogersContext(100.0, 0.0)
    with pytest.raises(DomainError):
        RogersContext(0.5, 0.1)


def test_from_kappa_roundtrip():
    ctx = RogersContext.from_kappa(176.4, 0.1)
    assert ctx.kappa == pytest.approx(176.4, rel=1e-15)


# -------------------------------------------------------- error constants

def test_error_constants_anchors():
    c = error_constants(RogersContext.from_kappa(24.0, 0.1))
    oc = _constants_oracle(24.0, 0.1)
    assert (c.c1, c.c2, c.c3, c.c41, c.c42) == pytest.approx(oc, rel=1e-14)
    assert c.c1 == pytest.approx(0.206, abs=5e-4)
    assert c.c2 == pytest.approx(3.73, abs=5e-3)
    assert c.c3 == pytest.approx(1.0004, abs=5e-5)
    c176 = error_constants(RogersContext.from_kappa(176.4, 0.1))
    assert c176.c42 == pytest.approx(3.54, abs=5e-3)
    assert (c176.c1, c176.c2, c176.c3, c176.c41, c176.c42) == pytest.approx(
        _constants_oracle(176.4, 0.1), rel=1e-14
    )


def test_error_constants_large_kappa_limit():
    # dropping every 1/kappa term leaves c1 -> sqrt(pi)/(4 e)
    c = error_constants(RogersContext.from_kappa(1e12, 0.1))
    assert c.c1 == pytest.approx(SQRT_PI / (4.0 * math.e), abs=1e-11)


def test_error_constants_positive_and_monotone():
    for theta in THETA_GRID:
        prev = None
        for kappa in KAPPA_GRID:
            c = error_constants(RogersContext.from_kappa(kappa, theta))
            vals = (c.c1, c.c2, c.c3, c.c41, c.c42)
            assert all(v > 0 for v in vals)
            if prev is not None:
                assert all(a < b for a, b in zip(vals, prev)), "not decreasing in kappa"
            prev = vals
    for kappa in KAPPA_GRID:
        prev = None
        for theta in THETA_GRID:
            c = error_constants(RogersContext.from_kappa(kappa, theta))
            vals = (c.c1, c.c2, c.c3, c.c41, c.c42)
            if prev is not None:
                assert all(a > b for a, b in zip(vals, prev)), "not increasing in theta"
            prev = vals


def test_error_constants_domain():
    with pytest.raises(DomainError):
        error_constants(RogersContext.from_kappa(1.0, 0.1))


# ----------------------------------------------------------------- c_poly

def test_c_poly_at_zero_and_even():
    ctx = RogersContext.from_kappa(176.4, 0.1)
    c = error_constants(ctx)
    assert c_poly(ctx, 0.0) == c.c1
    for u in (0.3, 1.0, 1.6775):
        assert c_poly(ctx, u) == c_poly(ctx, -u)
    c1, _, _, c41, c42 = _constants_oracle(176.4, 0.1)
    u = 1.6775
    assert c_poly(ctx, u) == pytest.approx(c1 + c41 * u + c42 * u ** 3, rel=1e-14)
    assert c_poly(ctx, u) == pytest.approx(18.5, abs=0.1)


# ------------------------------------------------------------ u_threshold

def test_u_threshold_against_grid_scan():
    ctx = RogersContext.from_kappa(176.4, 0.1)
    u = u_threshold(ctx)
    hi = 176.4 ** 0.1
    grid = np.linspace(0.0, hi, 10 ** 6)
    c1, _, _, c41, c42 = _constants_oracle(176.4, 0.1)
    gv = c1 + c41 * grid + c42 * grid ** 3 - 0.5 * 176.4 * grid ** 2
    flip = int(np.nonzero(np.diff(np.sign(gv)))[0][0])
    assert grid[flip] <= u <= grid[flip + 1]
    assert u == pytest.approx(0.049, abs=2e-3)


@pytest.mark.parametrize("theta", THETA_GRID)
@pytest.mark.parametrize("kappa", KAPPA_GRID)
def test_u_threshold_grid_bounds(kappa, theta):
    ctx = RogersContext.from_kappa(kappa, theta)
    u = u_threshold(ctx)
    assert 0.0 < u <= min(0.19, kappa ** theta)
    residual = c_poly(ctx, u) - 0.5 * kappa * u * u
    assert abs(residual) <= 1e-10


def test_u_threshold_decay_rate():
    # U = O(kappa^{-1/2}): U sqrt(kappa) stays bounded
    for kappa in (24.0, 176.4, 1e4):
        u = u_threshold(RogersContext.from_kappa(kappa, 0.1))
        assert u * math.sqrt(kappa) <= 1.0


def test_u_threshold_bracket_error_outside_validity():
    with pytest.raises(BracketError):
        u_threshold(RogersContext.from_kappa(2.0, 0.1))


# ------------------------------------------------------- central integral

def _simpson_central(kappa, theta, n):
    hi = kappa ** theta
    xs = np.linspace(-hi, hi, 40001)
    ys = np.exp(-xs ** 2 + n * np.log1p(-xs ** 2 / (2 * kappa ** 2)))
    h = (2 * hi) / 40000
    s1 = h / 3 * (ys[0] + ys[-1] + 4 * ys[1:-1:2].sum() + 2 * ys[2:-1:2].sum())
    xs2 = np.linspace(-hi, hi, 80001)
    ys2 = np.exp(-xs2 ** 2 + n * np.log1p(-xs2 ** 2 / (2 * kappa ** 2)))
    h2 = (2 * hi) / 80000
    s2 = h2 / 3 * (ys2[0] + ys2[-1] + 4 * ys2[1:-1:2].sum() + 2 * ys2[2:-1:2].sum())
    return (16 * s2 - s1) / 15


def test_central_integral_headline_point():
    ctx = RogersContext(62238.0, 0.1)
    ci = central_integral(ctx)
    # limit comparison: the integrand tends to e^{-2u^2}
    assert ci.value == pytest.approx(1.2523, abs=2e-3)
    assert ci.value == pytest.approx(_simpson_central(ctx.kappa, 0.1, 62238.0), abs=1e-10)


def test_central_integral_below_sqrt_pi():
    for kappa, theta in ((24.0, 0.1), (24.0, 0.3), (176.4, 0.05), (1000.0, 0.3)):
        ctx = RogersContext.from_kappa(kappa, theta)
        v = central_integral(ctx).value
        assert 0.0 < v < SQRT_PI


def test_central_integral_small_kappa_oracle():
    ctx = RogersContext.from_kappa(24.0, 0.3)
    ci = central_integral(ctx)
    assert ci.value == pytest.approx(_simpson_central(24.0, 0.3, ctx.n), abs=1e-10)


# --------------------------------------------------------------- f_lower

def _f_oracle(kappa, theta):
    """Term-by-term reassembly of f from independently computed pieces."""
    ctx = RogersContext.from_kappa(kappa, theta)
    hi = kappa ** theta
    central = _simpson_central(kappa, theta, ctx.n)
    u = u_threshold(ctx)
    c_edge = c_poly(ctx, hi)
    c_star = c_poly(ctx, u)
    return (
        central
        - 2.0 * SQRT_PI * c_edge / kappa
        - (4.0 * u * c_star / kappa) * (1.0 + 4.0 * c_star / kappa)
        - 2.0 * math.exp(-hi)
    )


def test_f_headline_value():
    f = f_lower(RogersContext(62238.0, 0.1))
    assert 0.484 <= f.value <= 0.60
    assert f.value == pytest.approx(_f_oracle(math.sqrt(62238.0 / 2.0), 0.1), abs=1e-9)


def test_f_negative_at_small_kappa():
    assert f_lower(RogersContext.from_kappa(24.0, 0.1)).value < 0.0
    assert f_lower(RogersContext.from_kappa(24.0, 0.1)).value == pytest.approx(
        _f_oracle(24.0, 0.1), abs=1e-9
    )


def test_f_positive_midrange():
    f = f_lower(RogersContext.from_kappa(100.0, 0.1)).value
    assert 0.0 < f < SQRT_PI
    assert f == pytest.approx(_f_oracle(100.0, 0.1), abs=1e-9)


@pytest.mark.parametrize("theta", THETA_GRID)
def test_f_monotone_in_kappa(theta):
    values = [f_lower(RogersContext.from_kappa(k, theta)).value for k in KAPPA_GRID]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_f_bounded_by_sqrt_pi():
    for kappa in KAPPA_GRID:
        for theta in THETA_GRID:
            assert f_lower(RogersContext.from_kappa(kappa, theta)).value <= SQRT_PI


def test_f_domain():
    with pytest.raises(DomainError):
        f_lower(RogersContext.from_kappa(20.0, 0.1))


# --------------------------------------------------------- sigma bounds

def test_sigma_upper_small_n():
    # n=1: bound is sqrt(e/4) * 2!/Gamma(3/2)
    want = math.log(math.sqrt(math.e / 4.0) * 2.0 / math.gamma(1.5))
    assert sigma_upper_log(1) == pytest.approx(want, abs=1e-13)
    # sigma_1 = 1: two unit half-balls cover the length-2 segment
    assert sigma_upper_log(1) >= 0.0


def test_sigma_upper_stirling_asymptotic():
    # Stirling gives sigma_upper_log(n) = -(n/2) ln 2 + ln n + (ln 2)/2 + O(1/n)
    def defect(n):
        return sigma_upper_log(n) + 0.5 * n * math.log(2.0) - math.log(n) - 0.5 * math.log(2.0)

    assert abs(defect(10 ** 4)) <= 1e-3
    assert abs(defect(10 ** 6)) <= 1e-5
    assert abs(defect(10 ** 6)) < abs(defect(10 ** 4))


def test_sigma_lower_vacuous_and_finite():
    assert sigma_lower_log(1152, 0.1) is None
    low = sigma_lower_log(62238, 0.1)
    assert low is not None and math.isfinite(low.value)
    with pytest.raises(DomainError):
        sigma_lower_log(1000, 0.1)


def test_sigma_sandwich():
    for n in (62238, 10 ** 5):
        low = sigma_lower_log(n, 0.1)
        assert low is not None
        up = sigma_upper_log(n)
        assert low.value <= up
        # the gap is exactly ln(sqrt(pi)/f) >= 0
        f = f_lower(RogersContext(float(n), 0.1)).value
        assert up - low.value == pytest.approx(math.log(SQRT_PI / f), abs=1e-9)


# ------------------------------------------------------------- leech gap

def test_leech_gap_prediction():
    _, predicted, actual = leech_gap(100)
    # tolerance fixed by the exact-factorial evaluation: the prediction is
    # Stirling-level, off by O(1/n^2)
    assert abs(actual - predicted) <= 1e-4
    _, p4, a4 = leech_gap(10 ** 4)
    assert abs(a4 - p4) <= abs(actual - predicted)
    leech1, pred1, act1 = leech_gap(1)
    assert all(math.isfinite(v) for v in (leech1, pred1, act1))
