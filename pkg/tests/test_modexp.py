import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qkaleidoscope import modexp
from qkaleidoscope.errors import DomainError, SeriesOverflowError, UnsupportedOrderError

from oracles import mod_exp_mp

orders = st.integers(min_value=1, max_value=12)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class TestSeries:
    def test_zero_argument(self):
        assert modexp.mod_exp_series(3, 0, 0.0) == 1
        assert modexp.mod_exp_series(3, 1, 0.0) == 0

    def test_cosh_frozen(self):
        # 40-digit partial sum of x^{2k}/(2k)!
        assert modexp.mod_exp_series(2, 0, 1.0) == pytest.approx(1.5430806348152437, rel=1e-15)
        assert mod_exp_mp(2, 0, 1.0) == pytest.approx(1.5430806348152437, rel=1e-15)

    def test_plain_exponential(self):
        assert modexp.mod_exp_series(1, 0, 2.5) == pytest.approx(math.exp(2.5), rel=1e-15)

    @pytest.mark.parametrize("n", range(1, 13))
    @pytest.mark.parametrize("x", [0.1, 1.0, 7.5, 30.0, -4.0])
    def test_against_mpmath(self, n, x):
        for s in range(n):
            ref = mod_exp_mp(n, s, x)
            got = modexp.mod_exp_series(n, s, x).real
            assert abs(got - ref) <= 1e-13 * max(abs(ref), math.exp(abs(x)) * 1e-3)

    def test_complex_argument(self):
        z = 0.7 + 1.3j
        parts = [modexp.mod_exp_series(3, s, z) for s in range(3)]
        assert abs(sum(parts) - np.exp(z)) < 1e-14

    def test_errors(self):
        with pytest.raises(DomainError):
            modexp.mod_exp_series(3, 3, 1.0)
        with pytest.raises(DomainError):
            modexp.mod_exp_series(0, 0, 1.0)
        with pytest.raises(SeriesOverflowError):
            modexp.mod_exp_series(2, 0, 701.0)


class TestRoutes:
    def test_sinh_identity(self):
        for x in (-3.0, 0.2, 1.0, 12.0):
            assert modexp.mod_exp_superposition(2, 1, x).real == pytest.approx(math.sinh(x), rel=1e-13)

    def test_closed_frozen(self):
        assert modexp.mod_exp_closed(2, 0, 0.0) == 1.0
        assert modexp.mod_exp_closed(4, 2, 1.0) == pytest.approx(0.5013891644735521, rel=1e-13)
        assert modexp.mod_exp_closed(3, 0, 1.0) == pytest.approx(1.1680583133759186, rel=1e-13)
        assert modexp.mod_exp_closed(4, 3, 2.0) == pytest.approx(1.3587814905106685, rel=1e-13)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_closed_matches_mpmath(self, n):
        for x in np.arange(0.25, 30.01, 0.25):
            for s in range(n):
                assert rel(modexp.mod_exp_closed(n, s, x), mod_exp_mp(n, s, x)) < 1e-10

    def test_closed_unsupported(self):
        with pytest.raises(UnsupportedOrderError):
            modexp.mod_exp_closed(5, 0, 1.0)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_scaled_matches_mpmath(self, n):
        for x in (0.5, 20.0, 45.0, 120.0):
            for s in range(n):
                ref = float(mod_exp_mp(n, s, x) * math.exp(-x))
                assert modexp.mod_exp_scaled(n, s, x) == pytest.approx(ref, rel=1e-10)

    def test_scaled_huge_argument_is_finite(self):
        assert modexp.mod_exp_scaled(5, 2, 5000.0) == pytest.approx(0.2, rel=1e-12)


class TestDerivatives:
    def test_cycling_exact(self):
        r = modexp.ode_residual(3, 2, 1.0)
        assert r.cycling == 0.0
        assert r.finite_difference <= 1e-8

    def test_plain_exponential_is_own_derivative(self):
        for x in (-1.0, 0.0, 2.0):
            assert modexp.ode_residual(1, 0, x).cycling == 0.0

    def test_cosh_sinh(self):
        fd = (math.sinh(0.5 + 1e-5) - math.sinh(0.5 - 1e-5)) / 2e-5
        assert abs(math.cosh(0.5) - fd) <= 1e-8
        assert modexp.ode_residual(2, 1, 0.5).finite_difference <= 1e-8

    @pytest.mark.parametrize("n", range(1, 9))
    def test_initial_values(self, n):
        for s in range(n):
            for j in range(n):
                assert modexp.mod_exp_derivative(n, s, 0.0, j) == (1.0 if j == s else 0.0)

    def test_first_derivative_cycles(self):
        fam = modexp.ModExpFamily(5)
        for s in range(5):
            assert fam.derivative(s, 1.3) == pytest.approx(fam((s - 1) % 5, 1.3), rel=1e-15)

    def test_negative_order(self):
        with pytest.raises(DomainError):
            modexp.mod_exp_derivative(3, 0, 1.0, -1)


class TestRootOfUnity:
    def test_exact_quarter_turns(self):
        for n in range(1, 13):
            rou = modexp.RootOfUnity(n)
            assert rou.q_power(2 * n) == 1
            assert rou.q_power(n) == -1

    @pytest.mark.parametrize("n", range(1, 13))
    def test_lemma(self, n):
        for m in range(3 * n):
            expected = n if m % n == 0 else 0
            assert abs(modexp.root_of_unity_sum(n, m) - expected) <= 1e-12

    def test_w_is_conjugate_q2(self):
        rou = modexp.RootOfUnity(7)
        assert abs(rou.w - np.conj(rou.q2)) < 1e-15


class TestFamily:
    def test_large_argument_uses_superposition(self):
        fam = modexp.ModExpFamily(3)
        assert fam(0, 60.0) == pytest.approx(mod_exp_mp(3, 0, 60.0), rel=1e-12)

    def test_values_shape(self):
        assert modexp.ModExpFamily(4).values(1.0).shape == (4,)


@settings(max_examples=60, deadline=None)
@given(n=orders, x=st.floats(min_value=-20, max_value=20))
def test_partition_of_exponential(n, x):
    total = sum(modexp.mod_exp_series(n, s, x) for s in range(n))
    assert abs(total - math.exp(x)) <= 1e-12 * math.exp(abs(x))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 7), x=st.floats(min_value=0.25, max_value=30))
def test_series_equals_superposition(n, x):
    for s in range(n):
        assert rel(modexp.mod_exp_superposition(n, s, x).real, modexp.mod_exp_series(n, s, x).real) <= 1e-10


@settings(max_examples=40, deadline=None)
@given(n=orders, x=st.floats(min_value=-5, max_value=5), k=st.integers(0, 30))
def test_nth_derivative_returns_function(n, x, k):
    s = k % n
    assert modexp.ode_residual(n, s, x).cycling == 0.0


@settings(max_examples=40, deadline=None)
@given(n=orders, m=st.integers(-50, 50))
def test_q_power_periodic(n, m):
    rou = modexp.RootOfUnity(n)
    assert rou.q_power(m) == rou.q_power(m + 2 * n)
    assert abs(abs(rou.q_power(m)) - 1) < 1e-15
