"""Explicit two-sided bounds for the Rogers simplex packing constant
sigma_n.

The upper bound is the closed form (e/4n)^{n/2} (n+1)!/Gamma(1+n/2).  The
lower bound evaluates a central Gaussian-type integral over |u| <= kappa^theta
(kappa = sqrt(n/2), 0 < theta < 1/3) and subtracts three explicit error
terms built from the constants C1, C2, C3, C41, C42 below, the cubic
majorant C(u) = C1 + C41|u| + C42|u|^3, and the unique root U of
C(u) = (kappa/2) u^2 in [0, kappa^theta].  Everything is computed exactly as
printed, with no hidden slack: the resulting f(kappa, theta) may be negative,
in which case the lower bound is vacuous.

Also included: the classic log2 upper estimate of sigma_n due to Leech and
Sloane, with the Stirling-level gap between the two upper bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .specfun import (
    BracketError,
    DomainError,
    Evaluation,
    find_root,
    integrate,
)

__all__ = [
    "RogersContext",
    "RogersErrorConstants",
    "error_constants",
    "c_poly",
    "u_threshold",
    "central_integral",
    "f_lower",
    "sigma_upper_log",
    "sigma_lower_log",
    "leech_gap",
]

_SQRT_PI = math.sqrt(math.pi)
# Validity threshold for the root/lower-bound machinery: the cubic
# majorant is guaranteed to dip below (kappa/2) u^2 on the range only
# from kappa = 24 up.
KAPPA_MIN_LOWER = 24.0


@dataclass(frozen=True)
class RogersContext:
    """Dimension data for the sigma_n bounds: n = 2 kappa^2, theta in (0, 1/3).

    ``n`` is the packing dimension; integer in the criterion application,
    but any real n >= 2 is accepted so contexts can be built directly from
    kappa.
    """

    n: float
    theta: float

    def __post_init__(self) -> None:
        if not (self.n >= 1.0 and math.isfinite(self.n)):
            raise DomainError(f"need n >= 1, got {self.n}")
        if not (0.0 < self.theta < 1.0 / 3.0):
            raise DomainError(f"need theta in (0, 1/3), got {self.theta}")

    @property
    def kappa(self) -> float:
        return math.sqrt(self.n / 2.0)

    @classmethod
    def from_kappa(cls, kappa: float, theta: float) -> "RogersContext":
        return cls(2.0 * kappa * kappa, theta)


@dataclass(frozen=True)
class RogersErrorConstants:
    """The five error constants of the central-integral lower bound."""

    c1: float
    c2: float
    c3: float
    c41: float
    c42: float


@lru_cache(maxsize=512)
def error_constants(ctx: RogersContext) -> RogersErrorConstants:
    """C1, C2, C3, C41, C42 at (kappa, theta), exactly as printed.

    Requires kappa > 1 so that kappa^(theta-1) < 1 and all denominators
    stay positive.  Each constant is positive, decreasing in kappa and
    increasing in theta on the validity range.
    """
    k = ctx.kappa
    if k <= 1.0:
        raise DomainError(f"error constants need kappa > 1, got {k}")
    t = ctx.theta
    kt1 = k ** (t - 1.0)
    kt2 = k ** (2.0 * t - 2.0)
    kt3 = k ** (3.0 * t - 3.0)
    root = math.sqrt(1.0 + kt2)
    c1 = (
        2.0 * _SQRT_PI * root / math.e
        + (6.0 / k) * (1.0 + root / math.e)
        + 3.0 / k ** 3
    ) / 8.0
    c2 = (1.0 / (1.0 - kt1)) * (1.0 / (1.0 - kt1 / 4.0) + 2.5)
    c3 = math.sqrt(1.0 + kt2 / 4.0)
    c41 = c3 + kt3 * c2 * c3 + kt1 / 4.0
    c42 = c2 * (1.0 - 1.0 / (2.0 * k * k))
    return RogersErrorConstants(c1, c2, c3, c41, c42)


def c_poly(ctx: RogersContext, u: float) -> float:
    """The cubic error majorant C(u) = C1 + C41 |u| + C42 |u|^3 (even in u)."""
    c = error_constants(ctx)
    au = abs(u)
    return c.c1 + c.c41 * au + c.c42 * au ** 3


def u_threshold(ctx: RogersContext) -> float:
    """The unique root U of C(u) = (kappa/2) u^2 in [0, kappa^theta].

    Uniqueness (and the bracketing sign change) holds for kappa >= 24; a
    BracketError signals kappa/theta outside that validity range.  The
    returned root satisfies |C(U) - (kappa/2) U^2| <= 1e-10.
    """
    k = ctx.kappa
    hi = k ** ctx.theta

    def g(u: float) -> float:
        return c_poly(ctx, u) - 0.5 * k * u * u

    if g(0.0) <= 0.0 or g(hi) >= 0.0:
        raise BracketError(
            f"no sign change for the threshold root on [0, {hi}] "
            f"(kappa={k}, theta={ctx.theta}; validity needs kappa >= 24)"
        )
    return find_root(g, 0.0, hi, tol=1e-12)


def central_integral(ctx: RogersContext, tol: float = 1e-12) -> Evaluation:
    """Integral of e^{-u^2} (1 - u^2/(2 kappa^2))^n over [-kappa^theta, kappa^theta].

    Evaluated as twice the half-range integral by symmetry, with the
    integrand written exp(-u^2 + n log1p(-u^2/(2 kappa^2))) so large n does
    not lose accuracy.  The value lies in (0, sqrt(pi)).
    """
    k = ctx.kappa
    n = ctx.n
    hi = k ** ctx.theta
    if hi * hi >= 2.0 * k * k:
        raise DomainError("integrand base not positive on the range")
    two_k2 = 2.0 * k * k

    def f(u: float) -> float:
        return math.exp(-u * u + n * math.log1p(-u * u / two_k2))

    half = integrate(f, 0.0, hi, tol=0.5 * tol)
    return Evaluation(2.0 * half.value, 2.0 * half.err_estimate, half.terms_used)


def f_lower(ctx: RogersContext) -> Evaluation:
    """The normalized lower bound f(kappa, theta) for the Rogers integral.

    f = central integral
        - 2 sqrt(pi) C(kappa^theta)/kappa
        - (4 U C(U)/kappa) (1 + 4 C(U)/kappa)
        - 2 exp(-kappa^theta)

    Valid for kappa >= 24, theta in (0, 1/3); may be negative (the sigma_n
    lower bound is then vacuous).  Increasing in kappa on the validity
    range.
    """
    k = ctx.kappa
    if k < KAPPA_MIN_LOWER:
        raise DomainError(f"f_lower needs kappa >= {KAPPA_MIN_LOWER}, got {k}")
    hi = k ** ctx.theta
    central = central_integral(ctx)
    u_star = u_threshold(ctx)
    c_edge = c_poly(ctx, hi)
    c_star = c_poly(ctx, u_star)
    value = (
        central.value
        - 2.0 * _SQRT_PI * c_edge / k
        - (4.0 * u_star * c_star / k) * (1.0 + 4.0 * c_star / k)
        - 2.0 * math.exp(-hi)
    )
    err = central.err_estimate + 1e-12
    return Evaluation(value, err, central.terms_used)


def sigma_upper_log(n: float) -> float:
    """ln of the closed-form upper bound (e/4n)^{n/2} (n+1)!/Gamma(1+n/2)."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    return (
        0.5 * n * (1.0 - math.log(4.0 * n))
        + math.lgamma(n + 2.0)
        - math.lgamma(1.0 + 0.5 * n)
    )


def sigma_lower_log(n: float, theta: float) -> Evaluation | None:
    """ln of the explicit lower bound on sigma_n, or None when vacuous.

    The normalization gives
    ln sigma_n >= ln f - n ln 2 - (n/2) ln n - (1/2) ln pi + n/2
                  + ln (n+1)! - ln Gamma(1+n/2),
    defined when f(kappa, theta) > 0.  Requires n >= 1152 (kappa >= 24).
    """
    if n < 2.0 * KAPPA_MIN_LOWER ** 2:
        raise DomainError(f"sigma lower bound needs n >= 1152, got {n}")
    ctx = RogersContext(n, theta)
    f = f_lower(ctx)
    if f.value <= 0.0:
        return None
    value = (
        math.log(f.value)
        - n * math.log(2.0)
        - 0.5 * n * math.log(n)
        - 0.5 * math.log(math.pi)
        + 0.5 * n
        + math.lgamma(n + 2.0)
        - math.lgamma(1.0 + 0.5 * n)
    )
    err = f.err_estimate / f.value + 1e-12
    return Evaluation(value, err, f.terms_used)


def leech_gap(n: float) -> tuple[float, float, float]:
    """Leech-Sloane log2 estimate of sigma_n and its gap to the closed form.

    Returns (leech_log2, predicted_gap, actual_gap) where

      leech_log2    = (n/2) log2(n/4e) + (3/2) log2(e/sqrt(pi))
                      + 5.25/(n+2.5) - log2 Gamma(1+n/2),
      predicted_gap = (3/2) log2 n + 1/2 - (3/2) log2 e + (5/4) log2 pi
                      + 13 log2 e /(12n) - 5.25/(n+2.5),
      actual_gap    = sigma_upper_log(n)/ln 2 - leech_log2.

    The prediction is a Stirling-level identity: actual and predicted agree
    up to O(1/n^2).
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    ln2 = math.log(2.0)
    log2e = 1.0 / ln2
    leech = (
        0.5 * n * math.log2(n / (4.0 * math.e))
        + 1.5 * math.log2(math.e / _SQRT_PI)
        + 5.25 / (n + 2.5)
        - math.lgamma(1.0 + 0.5 * n) / ln2
    )
    predicted = (
        1.5 * math.log2(n)
        + 0.5
        - 1.5 * log2e
        + 1.25 * math.log2(math.pi)
        + 13.0 * log2e / (12.0 * n)
        - 5.25 / (n + 2.5)
    )
    actual = sigma_upper_log(n) / ln2 - leech
    return leech, predicted, actual
