"""Zimmert's digamma series F1, f1, F2, f2, F3 and the criterion
inequalities they feed.

The combination F_{a,b}(beta) = a F1 + a f1 + b F2 + b f2 + F3 bounds
zeta'/zeta(1+beta) + ln sqrt|Delta| - (n/2) ln pi from below for a number
field with a = r + s and b = s; chaining in the log-derivative bound on the
minimal proper ideal norm gives the second inequality checked here.  Both
are theorems: a failed check means an implementation defect somewhere in
this package, never a tunable.

As beta -> 0, F1 + f1 -> gamma + ln 4 + 1 and F2 + f2 -> gamma + ln 4 - 1;
each contains a 1/beta pole (the l = 1 term of F1 against psi(-beta/2) in
f1) that cancels in the sum.  Below beta = 1e-4 the cancellation costs too
many digits in binary64, so that is the domain cutoff; use the limit
constants directly instead of tiny beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .specfun import (
    CONSTANTS,
    ConvergenceError,
    DomainError,
    _PSI_TAIL,
    digamma,
)
from .cyclozeta import (
    cyclo_disc_log,
    cyclo_signature,
    min_proper_ideal_norm,
    zeta_cyclotomic,
    zeta_cyclotomic_logderiv,
)

__all__ = [
    "ZimmertTerms",
    "f_terms",
    "f_ab",
    "satz4_check",
    "min_norm_check",
    "zeta_lenstra_threshold",
    "BETA_MIN",
    "BETA_MAX",
]

BETA_MIN = 1e-4
BETA_MAX = 0.25

_SERIES_LENGTH = 100_000
_TAIL_WINDOW = 100
# below this index the digamma arguments can drop under the asymptotic
# threshold, so terms go through the scalar (shifted) digamma
_SCALAR_HEAD = 12
_TARGET_ACCURACY = 1e-8


@dataclass(frozen=True)
class ZimmertTerms:
    """The five series/point values at a fixed beta, plus their combination."""

    beta: float
    f1_series: float
    f1_point: float
    f2_series: float
    f2_point: float
    f3: float
    err_estimate: float
    terms_used: int

    def f_ab(self, a: int, b: int) -> float:
        return (
            a * (self.f1_series + self.f1_point)
            + b * (self.f2_series + self.f2_point)
            + self.f3
        )


def _psi_half_step(x: np.ndarray) -> np.ndarray:
    """psi(x + 1/2) - psi(x), vectorized, for x >= 8.

    Written as log1p(1/(2x)) + 1/(4x(x+1/2)) + tail differences so the
    large-argument cancellation never surfaces.
    """
    y = x + 0.5
    out = np.log1p(0.5 / x) + 0.5 / (2.0 * x * y)
    rx = 1.0 / (x * x)
    ry = 1.0 / (y * y)
    px = np.full_like(x, _PSI_TAIL[5])
    py = np.full_like(x, _PSI_TAIL[5])
    for c in (_PSI_TAIL[4], _PSI_TAIL[3], _PSI_TAIL[2], _PSI_TAIL[1], _PSI_TAIL[0]):
        px = c + rx * px
        py = c + ry * py
    out += ry * py - rx * px
    return out


def _series(beta: float, shift: int, length: int = _SERIES_LENGTH) -> tuple[float, float, int]:
    """Sum of the digamma series with harmonic subtraction.

    shift=0 gives the F1 series (arguments (2l-1+beta)/(2+4beta), harmonic
    terms 1/(2l-2-beta) + 1/(2l-1+beta)); shift=1 gives F2 (everything
    moved one step up).  Terms fall off like 1/l^2 or faster; the sum runs
    to a fixed length and adds the tail correction c/L estimated from the
    last computed terms.
    """
    d = 2.0 + 4.0 * beta
    w = 2.0 / (1.0 + 2.0 * beta)
    ell = np.arange(1, length + 1, dtype=np.float64)
    if shift == 0:
        x2 = (2.0 * ell - 1.0 + beta) / d
        harm = 1.0 / (2.0 * ell - 2.0 - beta) + 1.0 / (2.0 * ell - 1.0 + beta)
    else:
        x2 = (2.0 * ell + beta) / d
        harm = 1.0 / (2.0 * ell - 1.0 - beta) + 1.0 / (2.0 * ell + beta)

    terms = np.empty(length, dtype=np.float64)
    for i in range(_SCALAR_HEAD):
        terms[i] = w * (digamma(x2[i] + 0.5).value - digamma(x2[i]).value) - harm[i]
    terms[_SCALAR_HEAD:] = w * _psi_half_step(x2[_SCALAR_HEAD:]) - harm[_SCALAR_HEAD:]

    partial = math.fsum(terms.tolist())
    window = terms[-_TAIL_WINDOW:] * ell[-_TAIL_WINDOW:] ** 2
    c_hat = float(np.mean(window))
    tail = c_hat / length
    err = abs(tail) + 2.0 * abs(float(terms[-1])) + 5e-13
    return partial + tail, err, length


@lru_cache(maxsize=64)
def f_terms(beta: float) -> ZimmertTerms:
    """All five F-function pieces at beta in [1e-4, 1/4).

    Series are summed to absolute accuracy ~1e-8 (raises ConvergenceError
    if the tail estimate cannot certify that).
    """
    if not (BETA_MIN <= beta < BETA_MAX):
        raise DomainError(f"need beta in [{BETA_MIN}, {BETA_MAX}), got {beta}")
    d = 2.0 + 4.0 * beta
    w = 2.0 / (1.0 + 2.0 * beta)

    f1_series, err1, n1 = _series(beta, 0)
    f2_series, err2, n2 = _series(beta, 1)

    f1_point = -0.5 * (digamma((1.0 + beta) / 2.0).value + digamma(-beta / 2.0).value)
    f2_point = -0.5 * (digamma(1.0 + beta / 2.0).value + digamma((1.0 - beta) / 2.0).value)
    f3 = -4.0 / beta + w * (
        digamma((1.0 + beta) / d).value
        - digamma((1.0 + 3.0 * beta) / d).value
        + digamma((2.0 + 5.0 * beta) / d).value
        - digamma((2.0 + 3.0 * beta) / d).value
    )

    err = max(err1, err2)
    if err > _TARGET_ACCURACY:
        raise ConvergenceError(
            f"series tail estimate {err:.3e} cannot certify {_TARGET_ACCURACY}"
        )
    return ZimmertTerms(beta, f1_series, f1_point, f2_series, f2_point, f3, err, n1 + n2)


def f_ab(a: int, b: int, beta: float) -> float:
    """F_{a,b}(beta) = a(F1 + f1) + b(F2 + f2) + F3."""
    if a < 0 or b < 0:
        raise DomainError(f"need a, b >= 0, got a={a}, b={b}")
    return f_terms(beta).f_ab(a, b)


def satz4_check(m: int, beta: float) -> tuple[float, float, bool]:
    """The series bound against the zeta data of the m-th cyclotomic field:

        F_{r+s, s}(beta)/2  <=  zeta'/zeta(1+beta) + ln sqrt|Delta| - (n/2) ln pi.

    Returns (lhs, rhs, lhs <= rhs).  This inequality is a theorem; a False
    result means a defect in this package.
    """
    r, s = cyclo_signature(m)
    n = r + 2 * s
    lhs = 0.5 * f_ab(r + s, s, beta)
    rhs = (
        zeta_cyclotomic_logderiv(m, 1.0 + beta).value
        + 0.5 * cyclo_disc_log(m)
        - 0.5 * n * math.log(math.pi)
    )
    return lhs, rhs, lhs <= rhs


def min_norm_check(m: int, beta: float) -> tuple[float, float, bool]:
    """The minimal-ideal-norm consequence, without any asymptotic remainder:

        ln N(I0) (1 - 1/zeta(1+beta))  <=  -F_{r+s, s}(beta)/2
                                            + ln sqrt|Delta| - (n/2) ln pi.

    Assembled from the series bound and the log-derivative bound
    -zeta'/zeta >= ln N(I0) (1 - 1/zeta); a theorem like satz4_check.
    """
    r, s = cyclo_signature(m)
    n = r + 2 * s
    z = zeta_cyclotomic(m, 1.0 + beta)
    lhs = math.log(min_proper_ideal_norm(m)) * (1.0 - 1.0 / z.value)
    rhs = (
        -0.5 * f_ab(r + s, s, beta)
        + 0.5 * cyclo_disc_log(m)
        - 0.5 * n * math.log(math.pi)
    )
    return lhs, rhs, lhs <= rhs


def zeta_lenstra_threshold(c: float) -> tuple[float, float]:
    """The zeta lower-bound threshold attached to a packing-exponent C:

        2 ln 2 / (3 ln 2 + gamma - 1 - 2C)

    Returns (threshold, denominator).  With Rogers' own C = (ln 2)/2 the
    denominator is 2 ln 2 + gamma - 1 and the threshold is 1.43879...; the
    denominator is exposed because its sign flips for larger C and the
    hypothesis direction in the source material is ambiguous (we evaluate
    the printed formula, we do not guess the intent).
    """
    den = 3.0 * math.log(2.0) + CONSTANTS.euler_gamma - 1.0 - 2.0 * c
    if abs(den) < 1e-300:
        raise DomainError("threshold denominator vanishes")
    return 2.0 * math.log(2.0) / den, den
