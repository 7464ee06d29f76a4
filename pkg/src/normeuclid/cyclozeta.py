"""Dedekind zeta functions of cyclotomic fields, two ways.

The field of m-th roots of unity has degree phi(m), and its zeta function
factors as the product of Dirichlet L-functions over all characters mod m,
each reduced to the primitive character that induces it (the reduction is
what makes the product correct at ramified primes).  L-values are computed
through the Hurwitz-zeta identity

    L(s, chi) = d^{-s} sum_{a=1}^{d} chi(a) zeta(s, a/d),   d = conductor.

An independent route multiplies Euler factors (1 - p^{-f s})^{-g} over
rational primes up to a configurable limit, where f is the multiplicative
order of p modulo the prime-to-p part of m and g = phi(.)/f; the omitted
tail is estimated from the prime-counting integral and reported in the
error estimate (it dominates for s near 1, where the truncated product is
far from converged).

Character values are exact rational rotations k/L (L = exponent of the
unit group), mapped to cos/sin only at evaluation time.  Conjugate pairs
are multiplied first so assembled products are real by construction; the
residual imaginary part is asserted tiny and discarded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct

import numpy as np

from .specfun import (
    ConvergenceError,
    DomainError,
    Evaluation,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    riemann_zeta,
)

__all__ = [
    "UnitGroupStructure",
    "DirichletCharacter",
    "ComplexEvaluation",
    "ScanRow",
    "euler_phi",
    "unit_group",
    "characters",
    "char_rotation",
    "char_value",
    "conjugate_character",
    "dirichlet_l",
    "zeta_cyclotomic",
    "zeta_cyclotomic_logderiv",
    "cyclo_disc_log",
    "cyclo_signature",
    "min_proper_ideal_norm",
    "scan",
    "threshold_check",
]

_TWO_PI = 2.0 * math.pi


# ------------------------------------------------------- basic arithmetic

def _factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def euler_phi(m: int) -> int:
    """Euler totient of m >= 1."""
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    phi = 1
    for p, k in _factorize(m).items():
        phi *= p ** (k - 1) * (p - 1)
    return phi


def _mult_order(a: int, mod: int) -> int:
    """Multiplicative order of a modulo mod (gcd(a, mod) must be 1)."""
    if mod == 1:
        return 1
    a %= mod
    if math.gcd(a, mod) != 1:
        raise DomainError(f"{a} not invertible mod {mod}")
    order = 1
    x = a
    while x != 1:
        x = x * a % mod
        order += 1
    return order


def _smallest_primitive_root(p: int) -> int:
    """Smallest primitive root of an odd prime p."""
    qs = list(_factorize(p - 1))
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
        g += 1


# ------------------------------------------------------------- unit group

@dataclass
class UnitGroupStructure:
    """CRT generator data for (Z/mZ)*.

    ``generators`` holds (residue mod m, order) with one entry per cyclic
    factor; ``dlog_table`` maps every coprime residue to its exponent
    vector over the generators.
    """

    modulus: int
    generators: tuple[tuple[int, int], ...]
    dlog_table: dict[int, tuple[int, ...]]


@lru_cache(maxsize=None)
def unit_group(m: int) -> UnitGroupStructure:
    """Decompose (Z/mZ)* into cyclic factors with explicit generators.

    Odd prime powers p^k get the smallest primitive root of p, lifted to
    p^k when needed; 2 contributes nothing, 4 gives <3>, and 2^k (k >= 3)
    gives <-1> x <5> with orders (2, 2^{k-2}).  Generators are lifted to
    residues mod m by CRT and the discrete-log table is enumerated.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    comps: list[tuple[int, int, int]] = []  # (p^k, local generator, order)
    for p, k in sorted(_factorize(m).items()):
        q = p ** k
        if p == 2:
            if k == 1:
                continue
            if k == 2:
                comps.append((4, 3, 2))
            else:
                comps.append((q, q - 1, 2))
                comps.append((q, 5, 2 ** (k - 2)))
        else:
            g = _smallest_primitive_root(p)
            if k >= 2 and pow(g, p - 1, p * p) == 1:
                g += p
            comps.append((q, g, p ** (k - 1) * (p - 1)))

    generators: list[tuple[int, int]] = []
    for q, g, order in comps:
        rest = m // q
        if rest == 1:
            lifted = g % m
        else:
            t = (g - 1) * pow(rest, -1, q) % q
            lifted = (1 + rest * t) % m
        generators.append((lifted, order))

    table: dict[int, tuple[int, ...]] = {1 % m: ()}
    for g, order in generators:
        nxt: dict[int, tuple[int, ...]] = {}
        for r, vec in table.items():
            x = r
            for e in range(order):
                nxt[x] = vec + (e,)
                x = x * g % m
        table = nxt
    if len(table) != euler_phi(m):
        raise RuntimeError(f"unit group enumeration failed for m={m}")
    return UnitGroupStructure(m, tuple(generators), table)


# ------------------------------------------------------------- characters

@dataclass(frozen=True)
class DirichletCharacter:
    """A character of (Z/mZ)* as an exponent vector over the generators.

    The value at a residue a with dlog vector v is the rotation
    sum_i exponents[i] * v[i] / order_i (mod 1); ``conductor`` is the
    smallest d | m through which the character factors.
    """

    modulus: int
    exponents: tuple[int, ...]
    conductor: int


def _divisors(m: int) -> list[int]:
    divs = [1]
    for p, k in _factorize(m).items():
        divs = [d * p ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def _group_exponent_data(m: int) -> tuple[int, tuple[int, ...]]:
    """(L, weights): L = lcm of generator orders, weights[i] = L // order_i."""
    g = unit_group(m)
    orders = [o for _, o in g.generators]
    big_l = math.lcm(*orders) if orders else 1
    return big_l, tuple(big_l // o for o in orders)


def _rotation_index(m: int, exponents: tuple[int, ...], vec: tuple[int, ...]) -> int:
    big_l, weights = _group_exponent_data(m)
    return sum(e * v * w for e, v, w in zip(exponents, vec, weights)) % big_l


@lru_cache(maxsize=None)
def characters(m: int) -> tuple[DirichletCharacter, ...]:
    """All phi(m) Dirichlet characters mod m, trivial character first.

    Conductors are found by scanning divisors d of m in increasing order
    for triviality on the kernel of reduction mod d.
    """
    g = unit_group(m)
    orders = [o for _, o in g.generators]
    divs = _divisors(m)
    kernels = {
        d: tuple(vec for r, vec in g.dlog_table.items() if r % d == 1 % d)
        for d in divs
    }
    out = []
    for exps in _iproduct(*(range(o) for o in orders)):
        conductor = next(
            d for d in divs
            if all(_rotation_index(m, exps, v) == 0 for v in kernels[d])
        )
        out.append(DirichletCharacter(m, exps, conductor))
    return tuple(out)


def char_rotation(chi: DirichletCharacter, a: int) -> Fraction | None:
    """Exact rotation index of chi(a) as a fraction of a full turn, or
    None when chi(a) = 0 (a not coprime to the modulus)."""
    m = chi.modulus
    if math.gcd(a, m) != 1:
        return None
    vec = unit_group(m).dlog_table[a % m]
    big_l, _ = _group_exponent_data(m)
    return Fraction(_rotation_index(m, chi.exponents, vec), big_l)


def char_value(chi: DirichletCharacter, a: int) -> complex:
    """chi(a) as a complex number (exactly 0 off the coprime residues)."""
    rot = char_rotation(chi, a)
    if rot is None:
        return 0j
    angle = _TWO_PI * (rot.numerator / rot.denominator)
    return complex(math.cos(angle), math.sin(angle))


def conjugate_character(chi: DirichletCharacter) -> DirichletCharacter:
    """The complex-conjugate character (negated exponent vector)."""
    orders = [o for _, o in unit_group(chi.modulus).generators]
    exps = tuple((-e) % o for e, o in zip(chi.exponents, orders))
    return DirichletCharacter(chi.modulus, exps, chi.conductor)


@lru_cache(maxsize=None)
def _value_table(chi: DirichletCharacter) -> tuple[complex, ...]:
    return tuple(char_value(chi, a) for a in range(1, chi.modulus + 1))


@lru_cache(maxsize=None)
def _primitive_table(chi: DirichletCharacter) -> tuple[complex, ...]:
    """Values of the primitive character inducing chi, indexed a = 1..conductor.

    For a coprime to the conductor d, the primitive value is chi(b) for
    any b = a + t d coprime to the full modulus.
    """
    m, d = chi.modulus, chi.conductor
    out = []
    for a in range(1, d + 1):
        if math.gcd(a, d) != 1:
            out.append(0j)
            continue
        b = a
        while math.gcd(b, m) != 1:
            b += d
        out.append(char_value(chi, b))
    return tuple(out)


# ------------------------------------------------------------ L-functions

@dataclass(frozen=True)
class ComplexEvaluation:
    """Like Evaluation, but the value may be genuinely complex
    (non-real characters have complex L-values)."""

    value: complex
    err_estimate: float
    terms_used: int


@lru_cache(maxsize=None)
def _hurwitz_vector(s: float, d: int) -> tuple[Evaluation, ...]:
    return tuple(hurwitz_zeta(s, a / d) for a in range(1, d + 1))


@lru_cache(maxsize=None)
def _hurwitz_ds_vector(s: float, d: int) -> tuple[Evaluation, ...]:
    return tuple(hurwitz_zeta_ds(s, a / d) for a in range(1, d + 1))


def _char_sum(table: tuple[complex, ...], vec: tuple[Evaluation, ...]) -> tuple[complex, float]:
    re = math.fsum(t.real * h.value for t, h in zip(table, vec))
    im = math.fsum(t.imag * h.value for t, h in zip(table, vec))
    err = math.fsum(h.err_estimate for t, h in zip(table, vec) if t != 0j)
    return complex(re, im), err


def dirichlet_l(s: float, chi: DirichletCharacter, primitive: bool = True) -> ComplexEvaluation:
    """L(s, chi) for s > 1 via the Hurwitz-zeta identity.

    With primitive=True (the default) the L-value of the inducing
    primitive character is returned; this is the factor that enters the
    cyclotomic zeta product.
    """
    if s <= 1.0:
        raise DomainError(f"dirichlet_l requires s > 1, got {s}")
    d = chi.conductor if primitive else chi.modulus
    if d == 1:
        z = riemann_zeta(s)
        return ComplexEvaluation(complex(z.value), z.err_estimate, z.terms_used)
    table = _primitive_table(chi) if primitive else _value_table(chi)
    vec = _hurwitz_vector(s, d)
    total, err = _char_sum(table, vec)
    scale = d ** (-s)
    terms = sum(h.terms_used for h in vec)
    return ComplexEvaluation(scale * total, scale * err, terms)


def _l_with_derivative(
    s: float, chi: DirichletCharacter
) -> tuple[complex, complex, float, float, int]:
    """(L, L', errL, errL', terms) for the primitive inducing character."""
    d = chi.conductor
    if d == 1:
        z = riemann_zeta(s)
        zd = hurwitz_zeta_ds(s, 1.0)
        return complex(z.value), complex(zd.value), z.err_estimate, zd.err_estimate, z.terms_used
    table = _primitive_table(chi)
    vec = _hurwitz_vector(s, d)
    dvec = _hurwitz_ds_vector(s, d)
    total, err = _char_sum(table, vec)
    dtotal, derr = _char_sum(table, dvec)
    scale = d ** (-s)
    log_d = math.log(d)
    l_val = scale * total
    l_deriv = -log_d * l_val + scale * dtotal
    terms = sum(h.terms_used for h in vec)
    return l_val, l_deriv, scale * err, log_d * scale * err + scale * derr, terms


# --------------------------------------------------------- zeta assembly

def _is_real_character(chi: DirichletCharacter) -> bool:
    return conjugate_character(chi).exponents == chi.exponents


def _assert_real(z: complex, what: str) -> float:
    assert abs(z.imag) <= 1e-10 * max(1.0, abs(z.real)), (
        f"{what}: residual imaginary part {z.imag} too large"
    )
    return z.real


def _zeta_hurwitz(m: int, s: float) -> Evaluation:
    chars = characters(m)
    by_exps = {c.exponents: c for c in chars}
    done: set[tuple[int, ...]] = set()
    value = 1.0
    rel_err = 0.0
    terms = 0
    for chi in chars:
        if chi.exponents in done:
            continue
        done.add(chi.exponents)
        if _is_real_character(chi):
            lv = dirichlet_l(s, chi)
            real = _assert_real(lv.value, f"L(s, chi) for real chi mod {m}")
            value *= real
            rel_err += lv.err_estimate / abs(real)
            terms += lv.terms_used
        else:
            conj = conjugate_character(chi)
            done.add(conj.exponents)
            l1 = dirichlet_l(s, chi)
            l2 = dirichlet_l(s, by_exps[conj.exponents])
            pair = l1.value * l2.value
            real = _assert_real(pair, f"conjugate L-pair mod {m}")
            value *= real
            rel_err += l1.err_estimate / abs(l1.value) + l2.err_estimate / abs(l2.value)
            terms += l1.terms_used + l2.terms_used
    err = abs(value) * (rel_err + 2e-16 * len(chars))
    return Evaluation(value, err, terms)


# prime sieve, grown on demand and shared across calls
_PRIME_CACHE: dict[str, object] = {"limit": 0}


def _primes_up_to(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    if limit > _PRIME_CACHE["limit"]:  # type: ignore[operator]
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        _PRIME_CACHE["primes"] = np.nonzero(sieve)[0].astype(np.int64)
        _PRIME_CACHE["limit"] = limit
    primes: np.ndarray = _PRIME_CACHE["primes"]  # type: ignore[assignment]
    if _PRIME_CACHE["limit"] == limit:
        return primes
    return primes[: np.searchsorted(primes, limit, side="right")]


@lru_cache(maxsize=None)
def _order_lut(m: int) -> np.ndarray:
    """order_lut[r] = multiplicative order of r mod m for coprime r, else 0."""
    if m == 1:
        return np.ones(1, dtype=np.int64)
    lut = np.zeros(m, dtype=np.int64)
    for r in range(1, m):
        if math.gcd(r, m) == 1:
            lut[r] = _mult_order(r, m)
    return lut


def _residue_degree(p: int, m: int) -> int:
    """Residue degree of p in the m-th cyclotomic field: the order of p
    modulo the prime-to-p part of m."""
    mm = m
    while mm % p == 0:
        mm //= p
    return 1 if mm == 1 else _mult_order(p, mm)


def _prime_tail_integral(s: float, limit: int) -> float:
    """Estimate of sum_{p > limit} p^{-s} from the prime-counting integral."""
    lo = math.log(limit)
    hi = lo + min(80.0 / (s - 1.0), 1e6)
    # integral of x^{-s}/ln x dx  ==  integral of e^{(1-s)u}/u du, u = ln x
    n_steps = 2000
    h = (hi - lo) / n_steps
    acc = 0.0
    for i in range(n_steps + 1):
        u = lo + i * h
        w = 0.5 if i in (0, n_steps) else 1.0
        acc += w * math.exp((1.0 - s) * u) / u
    return acc * h


def _zeta_euler(m: int, s: float, prime_limit: int, tol: float | None) -> Evaluation:
    if prime_limit < 10:
        raise DomainError(f"prime_limit too small: {prime_limit}")
    phi = euler_phi(m)
    # ramified primes (p | m), handled exactly
    ram_log = 0.0
    ram_count = 0
    for p in _factorize(m):
        f = _residue_degree(p, m)
        mm = m
        while mm % p == 0:
            mm //= p
        g = euler_phi(mm) // f
        ram_log += -g * math.log1p(-float(p) ** (-f * s))
        ram_count += 1
    # everything else via the order lookup table
    primes = _primes_up_to(prime_limit)
    lut = _order_lut(m)
    rs = primes % m
    fv = lut[rs]
    mask = fv > 0
    f_arr = fv[mask].astype(np.float64)
    p_arr = primes[mask].astype(np.float64)
    g_arr = (phi // fv[mask]).astype(np.float64)
    x = np.exp(-f_arr * s * np.log(p_arr))
    log_total = ram_log + float(np.sum(-g_arr * np.log1p(-x)))
    value = math.exp(log_total)

    tail1 = 1.3 * _prime_tail_integral(s, prime_limit)
    tail2 = float(prime_limit) ** (1.0 - 2.0 * s) / ((2.0 * s - 1.0) * math.log(prime_limit))
    err_log = phi * (tail1 + tail2)
    err = value * math.expm1(min(err_log, 700.0))
    if tol is not None and err > tol:
        raise ConvergenceError(
            f"euler tail bound {err:.3e} exceeds tol {tol} at prime_limit {prime_limit}"
        )
    return Evaluation(value, err, int(mask.sum()) + ram_count)


def zeta_cyclotomic(
    m: int,
    s: float,
    method: str = "hurwitz",
    prime_limit: int = 10 ** 6,
    tol: float | None = None,
) -> Evaluation:
    """Dedekind zeta of the m-th cyclotomic field at real s > 1.

    method="hurwitz": product of primitive L-values over all characters
    mod m (accurate to roughly 1e-12 relative).  method="euler": truncated
    Euler product over rational primes up to prime_limit; its error
    estimate carries the omitted-tail bound, which is large for s near 1.
    Both deliver a real value > 1.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    if s <= 1.0:
        raise DomainError(f"need s > 1, got {s}")
    if method == "hurwitz":
        return _zeta_hurwitz(m, s)
    if method == "euler":
        return _zeta_euler(m, s, prime_limit, tol)
    raise DomainError(f"unknown method {method!r}")


def zeta_cyclotomic_logderiv(m: int, s: float) -> Evaluation:
    """zeta'/zeta of the m-th cyclotomic field at real s > 1, as the sum
    of L'/L over the primitive characters."""
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    if s <= 1.0:
        raise DomainError(f"need s > 1, got {s}")
    total = 0j
    err = 0.0
    terms = 0
    for chi in characters(m):
        l_val, l_deriv, err_l, err_ld, t = _l_with_derivative(s, chi)
        ratio = l_deriv / l_val
        total += ratio
        err += (err_ld + abs(ratio) * err_l) / abs(l_val)
        terms += t
    value = _assert_real(total, f"zeta log-derivative for m={m}")
    return Evaluation(value, err + 1e-14, terms)


# ----------------------------------------------- field-level invariants

def cyclo_disc_log(m: int) -> float:
    """ln |discriminant| of the m-th cyclotomic field:
    phi(m) ln m - sum_{p | m} (phi(m)/(p-1)) ln p.

    The formula already collapses m = 2 mod 4 onto the same field as m/2.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    if m == 1:
        return 0.0
    phi = euler_phi(m)
    return phi * math.log(m) - sum(
        (phi / (p - 1)) * math.log(p) for p in _factorize(m)
    )


def cyclo_signature(m: int) -> tuple[int, int]:
    """(real embeddings, complex pairs) of the m-th cyclotomic field."""
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    if m <= 2:
        return (1, 0)
    return (0, euler_phi(m) // 2)


def min_proper_ideal_norm(m: int) -> int:
    """Smallest norm of a proper nonzero ideal in the m-th cyclotomic ring.

    Equals min over rational primes p of p^{f_p} with f_p the residue
    degree; only primes p <= current best need checking since any larger
    prime already has norm >= p.
    """
    if m < 1:
        raise DomainError(f"need m >= 1, got {m}")
    best = 2 ** _residue_degree(2, m)
    p = 3
    while p <= best:
        if all(p % q for q in range(3, math.isqrt(p) + 1, 2)):
            best = min(best, p ** _residue_degree(p, m))
        p += 2
    return best


# ------------------------------------------------------------------ scans

@dataclass(frozen=True)
class ScanRow:
    """One point of the cyclotomic scan: zeta at s = 1 + phi(m)^{-epsilon}."""

    m: int
    phi_m: int
    epsilon: float
    s: float
    zeta_value: float
    err_estimate: float

    def __post_init__(self) -> None:
        if not (self.s > 1.0 and self.zeta_value > 1.0):
            raise ValueError(
                f"scan row m={self.m} violates s > 1, zeta > 1: "
                f"s={self.s}, zeta={self.zeta_value}"
            )


def scan_row(
    m: int,
    epsilon: float,
    method: str = "hurwitz",
    prime_limit: int = 10 ** 6,
) -> ScanRow:
    """A single scan point.  m = 2 mod 4 is evaluated through m/2 (same
    field, same degree), making duplicate rows bit-identical."""
    if not (0.0 < epsilon < 1.0):
        raise DomainError(f"need epsilon in (0, 1), got {epsilon}")
    phi = euler_phi(m)
    s = 1.0 + float(phi) ** -epsilon
    mc = m // 2 if (m % 4 == 2) else m
    z = zeta_cyclotomic(mc, s, method=method, prime_limit=prime_limit)
    return ScanRow(m, phi, epsilon, s, z.value, z.err_estimate)


def scan(
    m_max: int,
    epsilon: float,
    keep_even_duplicates: bool = True,
    method: str = "hurwitz",
    prime_limit: int = 10 ** 6,
) -> list[ScanRow]:
    """Scan rows for m = 1..m_max at s = 1 + phi(m)^{-epsilon}.

    Moduli congruent to 2 mod 4 name the same field as their half; they
    are kept by default (one row per m) and can be skipped instead.
    """
    if m_max < 1:
        raise DomainError(f"need m_max >= 1, got {m_max}")
    rows = []
    for m in range(1, m_max + 1):
        if not keep_even_duplicates and m > 2 and m % 4 == 2:
            continue
        rows.append(scan_row(m, epsilon, method=method, prime_limit=prime_limit))
    return rows


def threshold_check(row: ScanRow, bound: float) -> bool:
    """Whether the scan point clears the lower-bound threshold."""
    return row.zeta_value >= bound
