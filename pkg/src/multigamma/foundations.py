"""Exact combinatorics, mathematical constants, and the principal complex logarithm.

Everything here is pure and cheap; the heavier series machinery lives in
:mod:`multigamma.multigamma`.
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "ConstantsTable",
    "CONSTANTS",
    "CutPlanePoint",
    "DomainError",
    "PoleError",
    "SingularityError",
    "ConvergenceError",
    "ConstructionError",
    "DEFAULT_MAX_ORDER",
    "max_order",
    "check_order",
    "validate_cut_plane",
    "principal_log",
    "bernoulli",
    "pochhammer",
    "binomial",
    "counting_N",
    "zero_multiplicity",
    "southeast_diagonal_sum",
]


class DomainError(ValueError):
    """Argument lies outside the operation's domain."""


class PoleError(DomainError):
    """Argument coincides (within tolerance) with a pole or zero of the function."""


class SingularityError(DomainError):
    """The requested point is a singularity of the density (a negative integer)."""


class ConvergenceError(RuntimeError):
    """An iterative or series computation failed to reach the requested tolerance."""


class ConstructionError(RuntimeError):
    """Self-validation of precomputed coefficients failed."""


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

_EULER_GAMMA = 0.57721566490153286060651209008240243
_LOG_TWO_PI = 1.83787706640934548356065947281123528
_ZETA3 = 1.20205690315959428539973816151144999
_ZETA_PRIME_M1 = -0.165421143700450929213919660242780643
_PI_SQ_OVER_6 = 1.64493406684822643647241516664602519


@dataclass(frozen=True)
class ConstantsTable:
    """Double-precision mathematical constants used throughout the package.

    ``zeta_prime_0`` and ``log_glaisher`` are stored through their defining
    identities (-log(2*pi)/2 and 1/12 - zeta'(-1)) so the table is internally
    consistent to the last bit; ``zeta_prime_m2`` uses -zeta(3)/(4*pi^2).
    """

    euler_gamma: float = _EULER_GAMMA
    log_two_pi: float = _LOG_TWO_PI
    zeta_prime_0: float = -_LOG_TWO_PI / 2.0
    zeta_prime_m1: float = _ZETA_PRIME_M1
    zeta_prime_m2: float = -_ZETA3 / (4.0 * math.pi**2)
    log_glaisher: float = 1.0 / 12.0 - _ZETA_PRIME_M1
    pi_sq_over_6: float = _PI_SQ_OVER_6
    zeta3: float = _ZETA3

    def validate(self) -> None:
        if abs(self.zeta_prime_0 + self.log_two_pi / 2.0) > 1e-14 * abs(self.zeta_prime_0):
            raise ConstructionError("zeta'(0) != -log(2 pi)/2")
        if abs(self.log_glaisher - (1.0 / 12.0 - self.zeta_prime_m1)) > 1e-14 * self.log_glaisher:
            raise ConstructionError("log A != 1/12 - zeta'(-1)")


CONSTANTS = ConstantsTable()
CONSTANTS.validate()


# ---------------------------------------------------------------------------
# order cap and domain checks
# ---------------------------------------------------------------------------

DEFAULT_MAX_ORDER = 6


def max_order() -> int:
    """Configured order cap; MULTIGAMMA_MAX_ORDER overrides the default of 6."""
    raw = os.environ.get("MULTIGAMMA_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"MULTIGAMMA_MAX_ORDER={raw!r} is not an integer") from exc
    if value < 1:
        raise DomainError("MULTIGAMMA_MAX_ORDER must be >= 1")
    return value


def check_order(n: int, cap: int | None = None) -> int:
    cap = max_order() if cap is None else cap
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"order must be an integer, got {n!r}")
    if not 1 <= n <= cap:
        raise DomainError(f"order n={n} outside [1, {cap}]")
    return n


def validate_cut_plane(z: complex, what: str = "z") -> complex:
    """Reject points on the closed negative real axis (-inf, 0]."""
    z = complex(z)
    if z.imag == 0.0 and z.real <= 0.0:
        raise DomainError(f"{what}={z} lies on the closed negative real axis")
    return z


@dataclass(frozen=True)
class CutPlanePoint:
    """A point of the cut plane C \\ (-inf, 0]."""

    re: float
    im: float = 0.0

    def __post_init__(self) -> None:
        validate_cut_plane(complex(self.re, self.im))

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def principal_log(z: complex) -> complex:
    """Principal branch of log z, real on (0, inf), arg in (-pi, pi)."""
    z = validate_cut_plane(z)
    if z.imag == 0.0:
        return complex(math.log(z.real), 0.0)
    return cmath.log(z)


_BERNOULLI_MAX = 64


@lru_cache(maxsize=None)
def _bernoulli_table(mmax: int) -> tuple[Fraction, ...]:
    # recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0, convention B_1 = -1/2
    table: list[Fraction] = [Fraction(1)]
    for m in range(1, mmax + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * table[k]
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(m: int) -> Fraction:
    """Exact Bernoulli number B_m under the convention B_1 = -1/2."""
    if m < 0:
        raise DomainError("bernoulli index must be >= 0")
    if m > _BERNOULLI_MAX:
        raise OverflowError(f"bernoulli index {m} above supported maximum {_BERNOULLI_MAX}")
    return _bernoulli_table(_BERNOULLI_MAX)[m]


def pochhammer(x: float, n: int) -> float:
    """Ascending factorial x (x+1) ... (x+n-1); the empty product is 1."""
    if n < 0:
        raise DomainError("pochhammer length must be >= 0")
    out = 1.0
    for i in range(n):
        out *= x + i
    return out


def _pochhammer_int(k: int, n: int) -> int:
    out = 1
    for i in range(n):
        out *= k + i
    return out


def binomial(a: int, b: int) -> int:
    if b > a:
        raise DomainError(f"binomial({a}, {b}) with b > a")
    if a < 0 or b < 0:
        raise DomainError("binomial arguments must be nonnegative")
    return math.comb(a, b)


def counting_N(n: int, t: float) -> float:
    """Zero-counting function [t]([t]+1)...([t]+n-1) / n!; zero for t < 1.

    Floor semantics apply at integer t, so the function is right-continuous.
    """
    check_order(n, cap=DEFAULT_MAX_ORDER + 10)
    if t <= 0.0:
        raise DomainError("counting_N requires t > 0")
    ft = math.floor(t)
    if ft < 1:
        return 0.0
    return _pochhammer_int(ft, n) / math.factorial(n)


def zero_multiplicity(n: int, k: int) -> int:
    """Multiplicity of the zero of 1/Gamma_n at z = -k: C(n+k-1, n-1)."""
    if k < 0:
        raise DomainError("zero index k must be >= 0")
    check_order(n, cap=DEFAULT_MAX_ORDER + 10)
    return math.comb(n + k - 1, n - 1)


def southeast_diagonal_sum(k: int, m: int) -> tuple[int, int]:
    """Both sides of sum_{l=0}^{k-1} (k-l)_m / m! = (k)_{m+1} / (m+1)!.

    Computed in exact integer arithmetic; equality of the two components is a
    test-suite assertion, not enforced here.
    """
    if k < 1 or m < 1:
        raise DomainError("southeast_diagonal_sum requires k, m >= 1")
    lhs = sum(_pochhammer_int(k - l, m) for l in range(k)) // math.factorial(m)
    # the sum of pochhammers is always divisible by m!: each term is m! C(k-l+m-1, m)
    lhs_exact = sum(math.comb(k - l + m - 1, m) for l in range(k))
    if lhs != lhs_exact:
        raise ConstructionError("internal pochhammer/binomial mismatch")
    rhs = math.comb(k + m, m + 1)
    return lhs_exact, rhs
