"""Foundation numerics against independent oracles: compensated sums,
long direct series with integral tails, Simpson-Richardson quadrature,
and grid sign scans."""

import math
import random

import numpy as np
import pytest

from normeuclid.specfun import (
    BracketError,
    CONSTANTS,
    ConvergenceError,
    DomainError,
    Evaluation,
    PoleError,
    digamma,
    find_root,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    integrate,
    log_gamma,
    riemann_zeta,
)

GAMMA = CONSTANTS.euler_gamma


# ------------------------------------------------------------------ types

def test_evaluation_rejects_nonfinite():
    with pytest.raises(ValueError):
        Evaluation(math.nan, 0.0, 1)
    with pytest.raises(ValueError):
        Evaluation(1.0, -1e-9, 1)
    with pytest.raises(ValueError):
        Evaluation(math.inf, 0.0, 1)


def test_constants():
    # lambda3 and beta3 are rendered exactly from their definitions
    assert CONSTANTS.lambda3 == 0.875 * CONSTANTS.zeta3
    assert CONSTANTS.beta3 == math.pi ** 3 / 32.0
    # zeta3 against the Euler-Maclaurin evaluation
    assert abs(CONSTANTS.zeta3 - riemann_zeta(3.0).value) <= 1e-14
    # odd cubic series oracle for lambda3: direct sum plus integral tail
    k = np.arange(0, 10 ** 6, dtype=np.float64)
    lam = float(np.sum((2 * k + 1) ** -3.0)) + 1.0 / (16.0 * (10 ** 6) ** 2)
    assert abs(CONSTANTS.lambda3 - lam) <= 1e-12
    # alternating series oracle for beta3 with half-term correction
    terms = (-1.0) ** k * (2 * k + 1) ** -3.0
    bet = float(np.sum(terms)) - 0.5 * float(terms[-1])
    assert abs(CONSTANTS.beta3 - bet) <= 1e-12


# ------------------------------------------------------------- log-gamma

def test_log_gamma_anchor_values():
    assert log_gamma(1.0).value == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(0.5).value == pytest.approx(0.5 * math.log(math.pi), abs=1e-14)


def test_log_gamma_against_compensated_factorial():
    oracle = math.fsum(math.log(k) for k in range(1, 31120))
    got = log_gamma(31120.0).value
    assert abs(got - oracle) <= 1e-12 * abs(oracle)


@pytest.mark.parametrize("x", [0.5, 10.0, 1e4])
def test_log_gamma_recurrence(x):
    lhs = log_gamma(x + 1.0).value - log_gamma(x).value - math.log(x)
    scale = max(1.0, abs(log_gamma(x + 1.0).value))
    assert abs(lhs) <= 1e-12 * scale


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)


# --------------------------------------------------------------- digamma

def _digamma_series_oracle(x: float, terms: int = 10 ** 7) -> float:
    """psi(x) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+x)), direct sum plus
    the Euler-Maclaurin tail (integral + midpoint)."""
    acc = 0.0
    chunk = 10 ** 6
    for lo in range(0, terms, chunk):
        k = np.arange(lo, min(lo + chunk, terms), dtype=np.float64)
        acc += float(np.sum(1.0 / (k + 1.0) - 1.0 / (k + x)))
    tail = math.log((terms + x) / (terms + 1.0))
    mid = 0.5 * (1.0 / (terms + 1.0) - 1.0 / (terms + x))
    return -GAMMA + acc + tail + mid


def test_digamma_anchor_values():
    assert abs(digamma(1.0).value + GAMMA) <= 1e-12
    target = -GAMMA - 2.0 * math.log(2.0)
    assert abs(digamma(0.5).value - target) <= 1e-12
    assert abs(digamma(0.5).value - _digamma_series_oracle(0.5)) <= 1e-12


def test_digamma_negative_argument():
    # recurrence cross-check: psi(-0.05) = psi(0.95) - 1/(-0.05)
    want = _digamma_series_oracle(0.95) + 20.0
    assert abs(digamma(-0.05).value - want) <= 1e-11


@pytest.mark.parametrize("x", [0.1, 0.9, 5.3])
def test_digamma_recurrence(x):
    assert abs(digamma(x + 1.0).value - digamma(x).value - 1.0 / x) <= 1e-12


def test_digamma_poles():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            digamma(x)


# ------------------------------------------------------------------ zeta

def test_riemann_zeta_known_values():
    assert riemann_zeta(2.0).value == pytest.approx(math.pi ** 2 / 6.0, abs=1e-14)
    assert riemann_zeta(4.0).value == pytest.approx(math.pi ** 4 / 90.0, abs=1e-14)


def test_riemann_zeta_near_one():
    z = riemann_zeta(1.0276)
    finer = riemann_zeta(1.0276, n_direct=80, bernoulli_pairs=12)
    assert abs(z.value - finer.value) <= max(z.err_estimate, 1e-12)
    assert z.value == pytest.approx(36.8, abs=0.1)


def test_zeta_pole():
    with pytest.raises(PoleError):
        riemann_zeta(1.0)
    with pytest.raises(PoleError):
        hurwitz_zeta(0.5, 0.3)


def test_hurwitz_identities():
    assert hurwitz_zeta(2.0, 1.0).value == pytest.approx(math.pi ** 2 / 6.0, abs=1e-14)
    assert hurwitz_zeta(2.0, 0.5).value == pytest.approx(math.pi ** 2 / 2.0, abs=1e-13)


def test_hurwitz_against_direct_summation():
    s, a = 1.5946, 0.2
    terms = 10 ** 7
    acc = 0.0
    for lo in range(0, terms, 10 ** 6):
        k = np.arange(lo, min(lo + 10 ** 6, terms), dtype=np.float64)
        acc += float(np.sum((k + a) ** -s))
    x = terms + a
    oracle = acc + x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** -s
    assert abs(hurwitz_zeta(s, a).value - oracle) <= 1e-10


def test_hurwitz_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 0.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 1.5)


@pytest.mark.parametrize("s", [1.01, 1.5, 2.0, 3.0])
@pytest.mark.parametrize("a", [0.1, 0.25, 0.5, 1.0])
def test_hurwitz_cutoff_doubling(s, a):
    base = hurwitz_zeta(s, a)
    fine = hurwitz_zeta(s, a, n_direct=2 * max(20, math.ceil(10 + s)), bernoulli_pairs=12)
    assert abs(base.value - fine.value) <= base.err_estimate


# ----------------------------------------------------------- zeta prime

def test_hurwitz_ds_at_two():
    # zeta'(2) via the log-weighted series with integral tail
    terms = 10 ** 7
    acc = 0.0
    for lo in range(1, terms, 10 ** 6):
        k = np.arange(lo, min(lo + 10 ** 6, terms), dtype=np.float64)
        acc += float(np.sum(np.log(k) / k ** 2))
    tail = (math.log(terms) + 1.0) / terms + 0.5 * math.log(terms) / terms ** 2
    oracle = -(acc + tail)
    got = hurwitz_zeta_ds(2.0, 1.0).value
    assert abs(got - oracle) <= 1e-10
    assert got == pytest.approx(-0.93754825431584375, abs=1e-13)


def test_hurwitz_ds_halves_identity():
    # zeta(s, 1/2) = (2^s - 1) zeta(s)  =>  d/ds at s=2
    want = math.log(2.0) * 4.0 * riemann_zeta(2.0).value + 3.0 * hurwitz_zeta_ds(2.0, 1.0).value
    assert hurwitz_zeta_ds(2.0, 0.5).value == pytest.approx(want, abs=1e-12)


def test_hurwitz_ds_self_consistency():
    h = 1e-6
    fd = (hurwitz_zeta(3.0 + h, 1.0).value - hurwitz_zeta(3.0 - h, 1.0).value) / (2.0 * h)
    assert abs(hurwitz_zeta_ds(3.0, 1.0).value - fd) <= 1e-7


def test_hurwitz_ds_finite_differences_random():
    # the difference quotient itself carries rounding noise ~ |zeta| eps/h,
    # so the agreement tolerance scales with the value magnitude
    rng = random.Random(20240817)
    h = 1e-6
    for _ in range(12):
        s = 1.1 + 3.9 * rng.random()
        a = 0.05 + 0.95 * rng.random()
        fd = (hurwitz_zeta(s + h, a).value - hurwitz_zeta(s - h, a).value) / (2.0 * h)
        tol = 1e-7 * max(1.0, hurwitz_zeta(s, a).value)
        assert abs(hurwitz_zeta_ds(s, a).value - fd) <= tol


# ------------------------------------------------------------ quadrature

def _simpson_richardson(f, lo, hi, n=2000):
    def simpson(m):
        xs = np.linspace(lo, hi, 2 * m + 1)
        ys = np.array([f(x) for x in xs])
        h = (hi - lo) / (2 * m)
        return h / 3.0 * (ys[0] + ys[-1] + 4.0 * ys[1:-1:2].sum() + 2.0 * ys[2:-1:2].sum())

    s1, s2 = simpson(n), simpson(2 * n)
    return (16.0 * s2 - s1) / 15.0


def test_integrate_gaussian():
    v = integrate(lambda u: math.exp(-u * u), -10.0, 10.0, tol=1e-12)
    assert v.value == pytest.approx(math.sqrt(math.pi), abs=1e-12)


def test_integrate_unit():
    assert integrate(lambda u: 1.0, 0.0, 1.0, tol=1e-12).value == pytest.approx(1.0, abs=1e-14)


def test_integrate_against_simpson_richardson():
    f = lambda u: math.exp(-2.0 * u * u)
    got = integrate(f, -1.6775, 1.6775, tol=1e-12).value
    oracle = _simpson_richardson(f, -1.6775, 1.6775)
    assert abs(got - oracle) <= 1e-11
    assert got == pytest.approx(1.2523, abs=1e-3)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 5, 8, 10])
def test_integrate_polynomial_exactness(k):
    got = integrate(lambda x, k=k: x ** k, 0.0, 1.0, tol=1e-12).value
    assert abs(got - 1.0 / (k + 1)) <= 1e-14


def test_integrate_budget_failure():
    with pytest.raises(ConvergenceError):
        integrate(lambda x: math.sin(1e5 * x), 0.0, 1.0, tol=1e-12, max_subdivisions=10)


def test_integrate_domain():
    with pytest.raises(DomainError):
        integrate(lambda x: x, 1.0, 0.0)
    with pytest.raises(DomainError):
        integrate(lambda x: x, 0.0, 1.0, tol=-1.0)


# ---------------------------------------------------------- root finding

def test_find_root_simple():
    assert find_root(lambda x: x - 0.5, 0.0, 1.0, tol=1e-14) == pytest.approx(0.5, abs=1e-12)
    assert find_root(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-14) == pytest.approx(
        math.sqrt(2.0), abs=1e-12
    )


def test_find_root_bracket_error():
    with pytest.raises(BracketError):
        find_root(lambda x: x * x + 1.0, -1.0, 1.0)
