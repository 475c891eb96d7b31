"""Holomorphic-branch evaluation of log Gamma, log G_2 (Barnes G), log G_3 and
general log G_n on the cut plane, boundary values on the negative axis, and
asymptotic expansions.

The workhorse is the genus-n canonical product in log form,

    log G_n(1+z) = q_n(z) + A_n(z),

    A_n(z) = (-1)^(n-1) * sum_k C(n+k-2, n-1) * [T_n(z/k) - Log(1 + z/k)],

where T_n(u) is the degree-n Taylor polynomial of Log(1+u) and q_n is a degree-n
polynomial fixed by the normalization G_n(1) = G_n(2) = ... = 1 at integers.
Truncating the k-sum at K and replacing the remainder by Hurwitz-zeta tails of
the termwise power series gives near machine precision at cost O(K) with
K ~ 4|z|.

``q_n`` coefficients: closed forms for n <= 3 (Euler gamma, log 2pi, and the
classical degree-3 constants); for n = 4..6 the coefficients were generated
offline at 50-digit precision from exact integer-point anchors (see
scripts/gen_barnes_coefficients.py) and are validated at first use against the
recurrence and the integer normalization, failing loudly on mismatch.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .foundations import (
    CONSTANTS,
    ConstructionError,
    DomainError,
    PoleError,
    SingularityError,
    bernoulli,
    check_order,
    pochhammer,
    validate_cut_plane,
)

__all__ = [
    "LogMultiGammaValue",
    "BoundaryValue",
    "CanonicalProductParams",
    "canonical_params",
    "log_gamma",
    "log_barnes_g2",
    "log_g3",
    "log_gn",
    "log_gn_shifted",
    "log_weierstrass_part",
    "log_abs_gn_negative_axis",
    "boundary_log_gn",
    "boundary_real_telescope",
    "stirling_log_g3",
    "recurrence_residual",
    "shifted_log_derivatives_at_one",
    "q_coefficients",
    "d3_constants",
]

_POLE_TOL = 1e-12


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogMultiGammaValue:
    """Value of the holomorphic branch of log G_n, real on (0, inf)."""

    value: complex
    order: int
    branch: str = "holomorphic-on-cut-plane"


@dataclass(frozen=True)
class BoundaryValue:
    """Upper-half-plane boundary limit of log G_n at t in (-k, -k+1)."""

    t: float
    k: int
    real_part: float
    imag_part: float


@dataclass(frozen=True)
class CanonicalProductParams:
    """Cached per-order data for the canonical-product evaluator."""

    order: int
    q_poly: tuple[float, ...]
    series_cutoff: int
    tail_order: int

    def __post_init__(self) -> None:
        if len(self.q_poly) != self.order + 1:
            raise ConstructionError("q_poly must have exactly order+1 coefficients")
        if self.q_poly[0] != 0.0:
            raise ConstructionError("q_poly constant term must be 0 (G_n(1) = 1)")


# ---------------------------------------------------------------------------
# Hurwitz-zeta tails sum_{k>=M} k^{-s}
# ---------------------------------------------------------------------------

_EM_COEFFS = tuple(float(bernoulli(2 * j) / math.factorial(2 * j)) for j in range(1, 7))


def _zeta_tail(s: int, m_start: int) -> float:
    """sum_{k >= m_start} k^(-s) for integer s >= 2, to ~1e-15 relative."""
    if s < 2:
        raise DomainError("zeta tail needs s >= 2")
    a = max(m_start, 8 * s)
    total = 0.0
    if a > m_start:
        ks = np.arange(m_start, a, dtype=float)
        total = math.fsum(ks ** (-s))
    base = a ** (1.0 - s) / (s - 1.0) + 0.5 * a ** (-float(s))
    corr = 0.0
    poch = float(s)  # ascending (s)_{2j-1}
    apow = a ** (-float(s) - 1.0)
    for j, c in enumerate(_EM_COEFFS, start=1):
        corr += c * poch * apow
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        apow /= a * a
    return total + base + corr


# ---------------------------------------------------------------------------
# binomial multiplicity rows and their polynomial expansion
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _binom_row(n: int, kmax: int) -> np.ndarray:
    """b_k = C(n+k-2, n-1) for k = 1..kmax, as floats."""
    k = np.arange(1, kmax + 1, dtype=float)
    if n == 1:
        return np.ones(kmax)
    ratios = (n - 1 + k[:-1]) / k[:-1]
    out = np.empty(kmax)
    out[0] = 1.0
    np.cumprod(ratios, out=out[1:])
    return out


@lru_cache(maxsize=16)
def _beta_coeffs(n: int) -> tuple[float, ...]:
    """Monomial coefficients of C(n+k-2, n-1) = prod_{i<n-1} (k+i) / (n-1)! in k."""
    poly = [Fraction(1)]
    for i in range(n - 1):
        new = [Fraction(0)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            new[d] += c * i
            new[d + 1] += c
        poly = new
    fact = math.factorial(n - 1)
    return tuple(float(c / fact) for c in poly)


@lru_cache(maxsize=256)
def _tail_weights(n: int, k0: int) -> tuple[np.ndarray, np.ndarray]:
    """(j, S_j) with S_j = sum_{k > k0} C(n+k-2, n-1) k^(-j), j = n+1 .. n+J.

    The argument ratio |z|/k0 is at most 1/2, so J is sized to push the
    geometric truncation below 1e-23 including the k0^n prefactor."""
    betas = _beta_coeffs(n)
    jmax = n + math.ceil(n * math.log2(k0)) + 76
    js = np.arange(n + 1, jmax + 1)
    svals = np.empty(len(js))
    for idx, j in enumerate(js):
        svals[idx] = math.fsum(
            beta * _zeta_tail(int(j) - i, k0 + 1) for i, beta in enumerate(betas)
        )
    return js, svals


def _pick_k0(absmax: float) -> int:
    """Series split: direct terms for k <= k0, zeta tails beyond, |z|/k0 <= 1/2.

    Keeping k0 close to 2|z| matters: for k >> |z| the direct difference
    T_n(z/k) - log1p(z/k) cancels to O((z/k)^(n+1)) and its rounding noise is
    amplified by the multiplicities C(n+k-2, n-1)."""
    target = max(8.0, 2.0 * (absmax + 1.0))
    return 1 << max(3, int(target - 1).bit_length())


# ---------------------------------------------------------------------------
# the regularized canonical-product log series A_n
# ---------------------------------------------------------------------------

def _taylor_log1p(u, n: int):
    """T_n(u) = sum_{j=1}^{n} (-1)^(j-1) u^j / j (array-safe)."""
    acc = u.copy() if isinstance(u, np.ndarray) else u
    up = u
    for j in range(2, n + 1):
        up = up * u
        acc = acc + ((-1) ** (j - 1) / j) * up
    return acc


def _log1p_c(u: np.ndarray) -> np.ndarray:
    """Complex log1p via Kahan's correction; full relative accuracy for small u.

    numpy's log1p has no complex loop, and log(1+u) alone loses the low bits of
    u that the binomial multiplicities would amplify.
    """
    w = 1.0 + u
    wm1 = w - 1.0
    safe = np.where(wm1 == 0.0, 1.0, wm1)
    return np.where(wm1 == 0.0, u, np.log(w) * u / safe)


def log_weierstrass_part(z: complex, n: int) -> complex:
    """A_n(z): log of the canonical product for order n with the polynomial
    normalization removed; holomorphic on C minus (-inf, -1], real on (-1, inf).

    For n = 3 this is the log of the regularized genus-3 product with zero
    multiplicities k(k+1)/2 (the product part of log Gamma_3(1+z))."""
    z = complex(z)
    if z.imag == 0.0:
        if z.real <= -1.0:
            raise DomainError("series argument on the cut (z real <= -1)")
        return complex(_a_series_real(np.array([z.real]), n, boundary=False)[0], 0.0)
    return _a_series_scalar(z, n)


def _a_series_scalar(z: complex, n: int) -> complex:
    """Compensated scalar evaluation of A_n(z) off the cut."""
    k0 = _pick_k0(abs(z))
    k = np.arange(1, k0 + 1, dtype=float)
    b = _binom_row(n, k0)
    u = z / k
    terms = b * (_taylor_log1p(u, n) - _log1p_c(u))
    re = math.fsum(terms.real.tolist())
    im = math.fsum(terms.imag.tolist())
    js, svals = _tail_weights(n, k0)
    # terms decay geometrically (ratio |z|/k0 <= 1/2); update by ratio so the
    # bare power z^j never overflows
    base = z ** int(js[0]) * svals[0]
    tre: list[float] = []
    tim: list[float] = []
    for idx, j in enumerate(js):
        sgn = -1.0 if (j % 2) else 1.0
        term = sgn * base / j
        tre.append(term.real)
        tim.append(term.imag)
        if abs(term) < 1e-25:
            break
        if idx + 1 < len(js):
            base = base * z * (svals[idx + 1] / svals[idx])
    re += math.fsum(tre)
    im += math.fsum(tim)
    sgn_n = 1.0 if (n % 2) else -1.0
    return sgn_n * complex(re, im)


_VEC_CHUNK_ENTRIES = 1 << 21


def _a_series_real(x: np.ndarray, n: int, boundary: bool) -> np.ndarray:
    """Vectorized A_n on the real axis.

    boundary=False: requires x > -1 (off the series cut); returns A_n(x).
    boundary=True: x may be any non-pole real; returns Re A_n(x + i0), i.e. the
    sum with log|1 + x/k| in place of the principal log.
    """
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return np.empty(0)
    k0 = _pick_k0(float(np.max(np.abs(x))))
    k = np.arange(1, k0 + 1, dtype=float)
    b = _binom_row(n, k0)
    js, svals = _tail_weights(n, k0)
    sgn_n = 1.0 if (n % 2) else -1.0
    out = np.empty(x.shape)
    rows = max(1, _VEC_CHUNK_ENTRIES // k0)
    for lo in range(0, x.size, rows):
        xs = x[lo:lo + rows, None]
        u = xs / k[None, :]
        if boundary:
            # log|1+u|, but through log1p wherever 1+u > 0: plain log(1+u)
            # drops the low bits of tiny u, which the multiplicities amplify
            lg = np.empty_like(u)
            pos = u > -1.0
            lg[pos] = np.log1p(u[pos])
            lg[~pos] = np.log(-(1.0 + u[~pos]))
        else:
            lg = np.log1p(u)
        direct = np.sum(b[None, :] * (_taylor_log1p(u, n) - lg), axis=1)
        base = xs[:, 0] ** int(js[0]) * svals[0]
        tail = np.zeros(xs.shape[0])
        for idx, j in enumerate(js):
            sgn = -1.0 if (j % 2) else 1.0
            tail += sgn * base / j
            if np.max(np.abs(base)) < 1e-25:
                break
            if idx + 1 < len(js):
                base = base * xs[:, 0] * (svals[idx + 1] / svals[idx])
        out[lo:lo + rows] = sgn_n * (direct + tail)
    return out


def _a_series_cvec(z: np.ndarray, n: int) -> np.ndarray:
    """Vectorized A_n for complex arrays off the cut."""
    z = np.asarray(z, dtype=complex)
    k0 = _pick_k0(float(np.max(np.abs(z))))
    k = np.arange(1, k0 + 1, dtype=float)
    b = _binom_row(n, k0)
    js, svals = _tail_weights(n, k0)
    sgn_n = 1.0 if (n % 2) else -1.0
    out = np.empty(z.shape, dtype=complex)
    rows = max(1, _VEC_CHUNK_ENTRIES // k0)
    for lo in range(0, z.size, rows):
        zs = z[lo:lo + rows, None]
        u = zs / k[None, :]
        direct = np.sum(b[None, :] * (_taylor_log1p(u, n) - _log1p_c(u)), axis=1)
        base = zs[:, 0] ** int(js[0]) * svals[0]
        tail = np.zeros(zs.shape[0], dtype=complex)
        for idx, j in enumerate(js):
            sgn = -1.0 if (j % 2) else 1.0
            tail += sgn * base / j
            if np.max(np.abs(base)) < 1e-25:
                break
            if idx + 1 < len(js):
                base = base * zs[:, 0] * (svals[idx + 1] / svals[idx])
        out[lo:lo + rows] = sgn_n * (direct + tail)
    return out


# ---------------------------------------------------------------------------
# the degree-n normalization polynomials q_n
# ---------------------------------------------------------------------------

def d3_constants() -> tuple[float, float, float]:
    """The degree-3 polynomial constants (D, E, F) of log Gamma_3(1+z)."""
    c = CONSTANTS
    d = -(c.euler_gamma + c.pi_sq_over_6 + 1.5) / 6.0
    e = (c.euler_gamma + c.log_two_pi + 0.5) / 4.0
    f = 0.375 - c.log_two_pi / 4.0 - c.log_glaisher
    return d, e, f


# Offline-generated at 50-digit precision from exact integer anchors; low order
# first, constant term 0. Regenerate with scripts/gen_barnes_coefficients.py.
_Q_FROZEN: dict[int, tuple[float, ...]] = {
    4: (0.0,
        0.278624883297871811864155337613563911,
        -0.673104671491706201153765602226821769,
        0.654351707111948315561408656264228366,
        -0.406227708545780586423190301932362971),
    5: (0.0,
        -0.240463372871858551230072385920028219,
        0.625010091204769795497301101579415898,
        -0.668910981996700100760913358828662914,
        0.447350669547041090045368617586373564,
        -0.268722656136221592510562319826373702),
    6: (0.0,
        0.21212776427660736379610662284783588,
        -0.583847414340488046270503763718834668,
        0.672940012384436921356507673989304348,
        -0.480099822552759367465140236158070409,
        0.290585796258511636318676050902261428,
        -0.194978207064306553271399707284449934),
}


@lru_cache(maxsize=32)
def _log_gn_int_table(nmax: int, mmax: int) -> dict[tuple[int, int], float]:
    """log G_n(m) at integer m >= 1 via the recurrence cascade (exact anchors)."""
    tbl: dict[tuple[int, int], float] = {}
    for m in range(1, mmax + 1):
        tbl[(1, m)] = math.lgamma(m)
    for n in range(2, nmax + 1):
        tbl[(n, 1)] = 0.0
        for m in range(1, mmax):
            tbl[(n, m + 1)] = tbl[(n, m)] + tbl[(n - 1, m)]
    return tbl


def _log_gn_int(n: int, m: int) -> float:
    return _log_gn_int_table(max(n, 7), max(m, 16))[(n, m)]


def _q_interpolated(n: int) -> tuple[float, ...]:
    """Runtime fallback for orders without frozen coefficients (reduced accuracy)."""
    nodes = np.arange(0, n + 1, dtype=float)
    avals = _a_series_real(nodes, n, boundary=False)
    vals = np.array([_log_gn_int(n, j + 1) for j in range(n + 1)]) - avals
    # Newton divided differences on integer nodes, expanded to monomials
    dd = vals.copy()
    for lev in range(1, n + 1):
        dd[lev:] = (dd[lev:] - dd[lev - 1:-1]) / lev
        # note: equal spacing 1 makes the denominator the level index
    coeffs = np.zeros(n + 1)
    basis = np.zeros(n + 1)
    basis[0] = 1.0
    for lev in range(n + 1):
        coeffs[: lev + 1] += dd[lev] * basis[: lev + 1]
        newb = np.zeros(n + 1)
        newb[1: lev + 2] = basis[: lev + 1]
        newb[: lev + 1] -= lev * basis[: lev + 1]
        basis = newb
    coeffs[0] = 0.0
    return tuple(coeffs)


@lru_cache(maxsize=16)
def q_coefficients(n: int) -> tuple[float, ...]:
    """Coefficients (low order first) of q_n, the degree-n polynomial part of
    log G_n(1+z); constant term 0. Validated against integer anchors."""
    c = CONSTANTS
    if n == 1:
        q: tuple[float, ...] = (0.0, -c.euler_gamma)
    elif n == 2:
        q = (0.0, (c.log_two_pi - 1.0) / 2.0, -(1.0 + c.euler_gamma) / 2.0)
    elif n == 3:
        d, e, f = d3_constants()
        q = (0.0, f, e, d)
    elif n in _Q_FROZEN:
        q = _Q_FROZEN[n]
    else:
        q = _q_interpolated(n)
    _validate_q(n, q)
    return q


def _validate_q(n: int, q: tuple[float, ...]) -> None:
    for j in (1, n + 1, n + 2):
        pred = _poly_eval(q, float(j)) + float(_a_series_real(np.array([float(j)]), n, False)[0])
        want = _log_gn_int(n, j + 1)
        scale = max(1.0, abs(want))
        if abs(pred - want) > 1e-8 * scale:
            raise ConstructionError(
                f"q_{n} failed integer-anchor validation at z={j}: "
                f"got {pred!r}, want {want!r}"
            )


def _poly_eval(coeffs: tuple[float, ...], z):
    acc = 0.0 if not isinstance(z, np.ndarray) else np.zeros_like(z)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


@lru_cache(maxsize=16)
def canonical_params(n: int) -> CanonicalProductParams:
    check_order(n)
    q = q_coefficients(n)
    js, _ = _tail_weights(n, 32)
    return CanonicalProductParams(order=n, q_poly=q, series_cutoff=32, tail_order=int(js[-1]))


# ---------------------------------------------------------------------------
# log Gamma (order 1 base case): Stirling series with recurrence shift
# ---------------------------------------------------------------------------

_STIRLING_SHIFT = 16.0
_STIRLING_COEFFS = tuple(
    float(bernoulli(2 * j) / Fraction(2 * j * (2 * j - 1))) for j in range(1, 13)
)
_HALF_LOG_TWO_PI = CONSTANTS.log_two_pi / 2.0


def _check_gamma_pole(w: complex) -> None:
    m = round(w.real)
    if m <= 0 and abs(w - m) < _POLE_TOL:
        raise PoleError(f"argument {w} within {_POLE_TOL} of the pole at {m}")


def _log_gamma_raw(z: complex) -> complex:
    z = complex(z)
    validate_cut_plane(z, "log_gamma argument")
    _check_gamma_pole(z)
    shift = 0
    if z.real < _STIRLING_SHIFT:
        shift = int(math.ceil(_STIRLING_SHIFT - z.real))
    w = z + shift
    # asymptotic series at Re w >= 16
    winv = 1.0 / w
    w2 = winv * winv
    acc = 0.0 + 0.0j
    for c in reversed(_STIRLING_COEFFS):
        acc = (acc + c) * w2
    series = acc / winv  # sum c_j w^(1-2j)
    logw = cmath.log(w)
    out = (w - 0.5) * logw - w + _HALF_LOG_TWO_PI + series
    if shift:
        corr = [cmath.log(z + j) for j in range(shift)]
        out -= complex(math.fsum(c.real for c in corr), math.fsum(c.imag for c in corr))
    if z.imag == 0.0:
        return complex(out.real, 0.0)
    return out


def log_gamma(z: complex) -> LogMultiGammaValue:
    """Holomorphic branch of log Gamma(z), real on (0, inf)."""
    return LogMultiGammaValue(value=_log_gamma_raw(z), order=1)


# ---------------------------------------------------------------------------
# general evaluation: log G_n(1+z) = q_n(z) + A_n(z)
# ---------------------------------------------------------------------------

def log_gn_shifted(z: complex, n: int) -> complex:
    """Raw complex value of log G_n(1+z) for 1+z off the closed negative axis."""
    check_order(n)
    z = complex(z)
    w = z + 1.0
    validate_cut_plane(w, "function argument 1+z")
    _check_gamma_pole(w)
    q = q_coefficients(n)
    if z.imag == 0.0:
        a = float(_a_series_real(np.array([z.real]), n, boundary=False)[0])
        return complex(_poly_eval(q, z.real) + a, 0.0)
    acc = 0.0 + 0.0j
    for c in reversed(q):
        acc = acc * z + c
    return acc + _a_series_scalar(z, n)


def log_gn_shifted_vec(z: np.ndarray, n: int) -> np.ndarray:
    """Vectorized log G_n(1+z); caller guarantees arguments off cut and poles."""
    check_order(n)
    z = np.asarray(z)
    q = q_coefficients(n)
    if np.isrealobj(z):
        zr = z.astype(float)
        return _poly_eval(q, zr) + _a_series_real(zr, n, boundary=False)
    acc = np.zeros(z.shape, dtype=complex)
    for c in reversed(q):
        acc = acc * z + c
    return acc + _a_series_cvec(z, n)


def log_gn(z: complex, n: int, params: CanonicalProductParams | None = None) -> LogMultiGammaValue:
    """log G_n(1+z) on the cut plane (note the shifted argument convention)."""
    if params is not None and params.order != n:
        raise DomainError(f"params are for order {params.order}, not {n}")
    return LogMultiGammaValue(value=log_gn_shifted(z, n), order=n)


def log_barnes_g2(z: complex) -> LogMultiGammaValue:
    """log of the Barnes G-function at z itself (unshifted argument)."""
    return LogMultiGammaValue(value=log_gn_shifted(complex(z) - 1.0, 2), order=2)


def log_g3(z: complex) -> LogMultiGammaValue:
    """log G_3(1+z) = D z^3 + E z^2 + F z + (product series), shifted argument."""
    return LogMultiGammaValue(value=log_gn_shifted(z, 3), order=3)


# ---------------------------------------------------------------------------
# boundary values on the negative axis
# ---------------------------------------------------------------------------

def log_abs_gn_negative_axis(w, n: int, min_distance: float = 1e-9) -> np.ndarray:
    """log |G_n(w)| for real w (scalar or array), w not within ``min_distance``
    of a nonpositive integer. Uses the boundary limit of the canonical product.

    Quadrature callers pass min_distance=0.0: nodes may come arbitrarily close
    to the logarithmic singularities, where the value is large but finite."""
    w = np.atleast_1d(np.asarray(w, dtype=float))
    if min_distance > 0.0:
        near = np.abs(w - np.round(w)) < min_distance
        if np.any(near & (np.round(w) <= 0)):
            raise SingularityError(f"argument within {min_distance} of a nonpositive integer")
    z = w - 1.0
    q = q_coefficients(n)
    return _poly_eval(q, z) + _a_series_real(z, n, boundary=True)


def boundary_log_gn(t: float, n: int) -> BoundaryValue:
    """Boundary limit of log G_n(z) as z -> t from the upper half plane,
    for negative non-integer t. The imaginary part is assembled exactly as
    (-1)^n pi (k)_n / n! with k = ceil(-t)."""
    check_order(n)
    t = float(t)
    if t >= 0.0:
        raise DomainError("boundary_log_gn requires t < 0")
    if abs(t - round(t)) < 1e-9:
        raise SingularityError(f"t={t} is (numerically) a negative integer; |log G_n| -> inf")
    k = math.ceil(-t)
    sign = -1.0 if (n % 2) else 1.0
    imag = sign * math.pi * pochhammer(float(k), n) / math.factorial(n)
    real = float(log_abs_gn_negative_axis(t, n)[0])
    return BoundaryValue(t=t, k=k, real_part=real, imag_part=imag)


def boundary_real_telescope(t: float, n: int) -> float:
    """Slow cross-check for log|G_n(t)|, t < 0: descend with the recurrence
    log|G_n(t)| = log G_n(t+k) - sum_{l<k} log|G_{n-1}(t+l)| to positive
    arguments, with the reflection formula at order 1."""
    t = float(t)
    if t > 0.0:
        return log_gn_shifted(t - 1.0, n).real
    if abs(t - round(t)) < 1e-9:
        raise SingularityError("negative integer")
    if n == 1:
        return math.log(math.pi) - math.log(abs(math.sin(math.pi * t))) - math.lgamma(1.0 - t)
    k = math.ceil(-t)
    top = log_gn_shifted(t + k - 1.0, n).real
    return top - math.fsum(boundary_real_telescope(t + l, n - 1) for l in range(k))


# ---------------------------------------------------------------------------
# asymptotics and the recurrence residual
# ---------------------------------------------------------------------------

def stirling_log_g3(x: float) -> float:
    """Asymptotic approximation of log Gamma_3(x+1) for x >= 10.

    Only the closed leading terms are used; the higher-order correction series
    is intentionally omitted, so the error decays like O(1/x^2) relative.
    """
    x = float(x)
    if x < 10.0:
        raise DomainError("stirling_log_g3 requires x >= 10")
    c = CONSTANTS
    lead = (x**3 / 6.0 - x**2 / 4.0 + 1.0 / 24.0) * math.log(x + 1.0)
    poly = -11.0 / 36.0 * x**3 + 5.0 / 24.0 * x**2 + x / 3.0 - 13.0 / 72.0
    zterms = (
        -(x**2 - x) / 2.0 * c.zeta_prime_0
        + (2.0 * x - 1.0) / 2.0 * c.zeta_prime_m1
        - c.zeta_prime_m2 / 2.0
    )
    return lead + poly + zterms + 1.0 / (12.0 * (x + 1.0))


def recurrence_residual(z: complex, n: int) -> float:
    """|G_{n+1}(z+1) - G_{n+1}(z) G_n(z)| / max(1, |G_{n+1}(z+1)|), computed on
    function values through the log defect to avoid overflow."""
    check_order(n + 1)
    z = complex(z)
    lhs = log_gn_shifted(z, n + 1)           # log G_{n+1}(z+1)
    l1 = log_gn_shifted(z - 1.0, n + 1)      # log G_{n+1}(z)
    l2 = log_gn_shifted(z - 1.0, n)          # log G_n(z)
    delta = l1 + l2 - lhs
    defect = abs(1.0 - cmath.exp(delta))
    scale = 1.0 if lhs.real >= 0.0 else math.exp(max(lhs.real, -745.0))
    return defect * scale


# ---------------------------------------------------------------------------
# derivatives of log G_n(1+z) at z = 1 (for the removable point of f_n)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def _t_sum(n: int, p: int) -> float:
    """T(n, p) = sum_k C(n+k-2, n-1) k^(-n) (k+1)^(-p), p >= 1."""
    kcut = 4096
    k = np.arange(1, kcut + 1, dtype=float)
    b = _binom_row(n, kcut)
    direct = math.fsum((b * k ** (-float(n)) * (k + 1.0) ** (-float(p))).tolist())
    betas = _beta_coeffs(n)
    tail = 0.0
    for qq in range(0, 7):
        cq = (-1) ** qq * math.comb(p + qq - 1, qq) if qq > 0 else 1
        s = n + p + qq
        tail += cq * math.fsum(
            beta * _zeta_tail(s - i, kcut + 1) for i, beta in enumerate(betas)
        )
    return direct + tail


@lru_cache(maxsize=32)
def shifted_log_derivatives_at_one(n: int, m_max: int) -> tuple[float, ...]:
    """(d^m/dz^m) log G_n(1+z) at z = 1, for m = 1..m_max.

    Uses A_n'(z) = sum_k C(n+k-2, n-1) z^n / (k^n (k+z)) differentiated in
    closed form, so no finite differences are involved."""
    q = q_coefficients(n)
    out = []
    for m in range(1, m_max + 1):
        qd = 0.0
        for j in range(m, n + 1):
            qd += q[j] * math.factorial(j) / math.factorial(j - m)
        asum = 0.0
        for i in range(0, min(m - 1, n) + 1):
            fall = math.factorial(n) / math.factorial(n - i)
            term = (
                math.comb(m - 1, i)
                * fall
                * (-1.0) ** (m - 1 - i)
                * math.factorial(m - 1 - i)
                * _t_sum(n, m - i)
            )
            asum += term
        out.append(qd + asum)
    return tuple(out)
