import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multigamma.foundations import (
    CONSTANTS,
    CutPlanePoint,
    DomainError,
    bernoulli,
    binomial,
    counting_N,
    max_order,
    pochhammer,
    principal_log,
    southeast_diagonal_sum,
    zero_multiplicity,
)


class TestConstants:
    def test_published_values(self):
        assert abs(CONSTANTS.euler_gamma - float(mp.euler)) < 1e-16
        assert abs(CONSTANTS.log_two_pi - float(mp.log(2 * mp.pi))) < 1e-15
        assert abs(CONSTANTS.zeta_prime_0 - float(mp.zeta(0, derivative=1))) < 1e-15
        assert abs(CONSTANTS.zeta_prime_m1 - float(mp.zeta(-1, derivative=1))) < 1e-16
        assert abs(CONSTANTS.zeta_prime_m2 - float(mp.zeta(-2, derivative=1))) < 1e-17
        assert abs(CONSTANTS.log_glaisher - float(mp.log(mp.glaisher))) < 1e-15
        assert abs(CONSTANTS.pi_sq_over_6 - math.pi**2 / 6) < 1e-15

    def test_internal_identities(self):
        assert abs(CONSTANTS.zeta_prime_0 + CONSTANTS.log_two_pi / 2) <= 1e-14 * abs(CONSTANTS.zeta_prime_0)
        assert abs(CONSTANTS.log_glaisher - (1 / 12 - CONSTANTS.zeta_prime_m1)) <= 1e-14


class TestPrincipalLog:
    def test_identity_cases(self):
        assert principal_log(1.0) == 0.0
        assert principal_log(1j) == 1j * math.pi / 2
        assert abs(principal_log(math.e**2) - 2.0) < 1e-14

    def test_rejects_cut(self):
        for z in (0.0, -1.0, -math.pi, complex(-2.0, 0.0)):
            with pytest.raises(DomainError):
                principal_log(z)

    @given(
        st.floats(-50, 50, allow_nan=False),
        st.floats(-50, 50, allow_nan=False),
    )
    @settings(max_examples=200, deadline=None)
    def test_exp_roundtrip(self, re, im):
        z = complex(re, im)
        if z.imag == 0.0 and z.real <= 0.0:
            return
        if abs(z) < 1e-6:
            return
        w = principal_log(z)
        assert abs(-math.pi) < w.imag <= math.pi
        import cmath

        assert abs(cmath.exp(w) - z) <= 1e-14 * abs(z)


class TestBernoulli:
    def test_small_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_vanish(self):
        for m in range(3, 64, 2):
            assert bernoulli(m) == 0

    def test_overflow_guard(self):
        with pytest.raises(OverflowError):
            bernoulli(65)


class TestPochhammerBinomial:
    def test_examples(self):
        assert pochhammer(1.0, 3) == 6.0
        assert pochhammer(2.0, 3) == 24.0
        assert pochhammer(5.0, 0) == 1.0
        assert binomial(2, 2) == 1
        assert binomial(4, 2) == 6
        assert binomial(5, 1) == 5

    def test_binomial_domain(self):
        with pytest.raises(DomainError):
            binomial(2, 3)

    @given(st.floats(-10, 10, allow_nan=False), st.integers(0, 15))
    @settings(max_examples=200, deadline=None)
    def test_recurrence(self, x, n):
        lhs = pochhammer(x, n + 1)
        rhs = pochhammer(x, n) * (x + n)
        assert abs(lhs - rhs) <= 1e-14 * max(1.0, abs(lhs))


class TestCountingFunction:
    def test_examples(self):
        assert counting_N(3, 2.5) == 4.0
        assert counting_N(1, 0.5) == 0.0
        for t in (3.0, 3.2, 3.9999):
            assert counting_N(3, t) == 10.0

    def test_domain(self):
        with pytest.raises(DomainError):
            counting_N(3, 0.0)
        with pytest.raises(DomainError):
            counting_N(3, -1.0)

    @given(st.integers(1, 6), st.integers(1, 25), st.floats(1e-3, 0.999))
    @settings(max_examples=150, deadline=None)
    def test_jump_equals_multiplicity(self, n, k, eps):
        jump = counting_N(n, k + eps) - counting_N(n, k - eps)
        # the jump at t = k matches the zero multiplicity of 1/Gamma_n(1+z)
        # at z = -k, which is C(n+k-2, n-1)
        assert jump == binomial(n + k - 2, n - 1)

    def test_zero_multiplicity_examples(self):
        assert zero_multiplicity(3, 0) == 1
        assert zero_multiplicity(1, 7) == 1
        assert zero_multiplicity(2, 3) == 4


class TestSoutheastDiagonal:
    def test_examples(self):
        assert southeast_diagonal_sum(1, 2) == (1, 1)
        assert southeast_diagonal_sum(3, 1) == (6, 6)
        assert southeast_diagonal_sum(4, 3) == (35, 35)

    @given(st.integers(1, 20), st.integers(1, 20))
    @settings(max_examples=400, deadline=None)
    def test_identity_exact(self, k, m):
        lhs, rhs = southeast_diagonal_sum(k, m)
        assert lhs == rhs


class TestCutPlanePoint:
    def test_valid(self):
        p = CutPlanePoint(re=-1.0, im=0.5)
        assert p.value == complex(-1.0, 0.5)

    def test_invalid(self):
        for re, im in ((-1.0, 0.0), (0.0, 0.0)):
            with pytest.raises(DomainError):
                CutPlanePoint(re=re, im=im)


def test_max_order_env(monkeypatch):
    assert max_order() == 6
    monkeypatch.setenv("MULTIGAMMA_MAX_ORDER", "4")
    assert max_order() == 4
    monkeypatch.setenv("MULTIGAMMA_MAX_ORDER", "junk")
    with pytest.raises(DomainError):
        max_order()
