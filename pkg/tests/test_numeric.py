import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from qtline import DomainError, QuadReal, Tolerance, approx_eq, default_tolerance, quad_to_float
from qtline.numeric import TOLERANCE_ENV_VAR

mp.mp.dps = 50


def sqrt2(a, b):
    return QuadReal(Fraction(a), Fraction(b), 2)


small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def quadreals(d=2):
    return st.builds(lambda a, b: QuadReal(a, b, d), small_fractions, small_fractions)


class TestArithmetic:
    def test_add_identity_components(self):
        assert sqrt2(1, 0) + sqrt2(0, 1) == sqrt2(1, 1)

    def test_conjugate_product_is_norm(self):
        # (1 + sqrt2)(1 - sqrt2) = a^2 - D b^2 = -1, by rational arithmetic
        x = sqrt2(1, 1)
        assert x * x.conjugate() == sqrt2(x.norm, 0)
        assert x * sqrt2(1, -1) == sqrt2(-1, 0)

    def test_mismatched_radicand_rejected(self):
        with pytest.raises(DomainError):
            sqrt2(1, 1) + QuadReal(Fraction(1), Fraction(1), 3)
        with pytest.raises(DomainError):
            sqrt2(1, 1) * QuadReal.sqrt(5)

    def test_non_square_free_radicand_rejected(self):
        for bad in (0, 1, 4, 8, 9, 12, -2):
            with pytest.raises(DomainError):
                QuadReal(Fraction(1), Fraction(1), bad)

    def test_division(self):
        x = sqrt2(3, -2)
        assert (x / x) == sqrt2(1, 0)
        assert sqrt2(0, 2) / sqrt2(0, 1) == sqrt2(2, 0)

    @given(quadreals(), quadreals())
    def test_additive_inverse(self, x, y):
        assert x + (-x) == sqrt2(0, 0)
        assert (x + y) - y == x

    @given(quadreals(), quadreals(), quadreals())
    def test_field_axioms_exact(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(quadreals())
    def test_reciprocal(self, x):
        if x:
            assert x * x.reciprocal() == sqrt2(1, 0)


class TestFloatConversion:
    def test_sqrt2(self):
        got = quad_to_float(QuadReal.sqrt(2))
        assert abs(got - float(mp.sqrt(2))) < 1e-12
        assert abs(got - float(mp.sqrt(2))) <= 4 * math.ulp(got)

    def test_rational_exact(self):
        assert quad_to_float(sqrt2(1, 0)) == 1.0
        assert quad_to_float(QuadReal(Fraction(7, 8), Fraction(0), 5)) == 0.875

    def test_cancellation(self):
        # 3 - 2*sqrt(2): heavy cancellation, still correctly rounded
        got = quad_to_float(sqrt2(3, -2))
        want = float(mp.mpf(3) - 2 * mp.sqrt(2))
        assert got == pytest.approx(want, abs=1e-12)
        assert abs(got - want) <= 4 * math.ulp(got)

    @given(quadreals(), quadreals())
    def test_monotone(self, x, y):
        if x == y:
            assert quad_to_float(x) == quad_to_float(y)
        elif (x - y).sign() < 0:
            assert quad_to_float(x) <= quad_to_float(y)
        else:
            assert quad_to_float(x) >= quad_to_float(y)

    @given(quadreals())
    def test_sign_matches_highprec(self, x):
        value = mp.mpf(x.a.numerator) / x.a.denominator + (mp.mpf(x.b.numerator) / x.b.denominator) * mp.sqrt(2)
        expected = 0 if value == 0 else (1 if value > 0 else -1)
        assert x.sign() == expected

    @given(quadreals())
    def test_floor_matches_highprec(self, x):
        value = mp.mpf(x.a.numerator) / x.a.denominator + (mp.mpf(x.b.numerator) / x.b.denominator) * mp.sqrt(2)
        assert math.floor(x) == int(mp.floor(value))

    def test_floor_near_integer(self):
        # 99/70 is a convergent of sqrt(2) from above: 99 - 70*sqrt(2) ~ +0.005
        assert math.floor(sqrt2(99, -70)) == 0
        assert math.floor(sqrt2(-99, 70)) == -1
        # 239/169 approaches from below: 239 - 169*sqrt(2) ~ -0.003
        assert math.floor(sqrt2(239, -169)) == -1
        assert math.floor(sqrt2(-239, 169)) == 0


class TestTolerance:
    def test_approx_eq_cases(self):
        tol = Tolerance(abs_eps=1e-9, rel_eps=1e-9)
        assert approx_eq(1 + 0j, 1 + 1e-12j, tol)
        assert not approx_eq(1 + 0j, 1.1 + 0j, tol)
        assert approx_eq(0j, 0j, tol)

    def test_validation(self):
        with pytest.raises(DomainError):
            Tolerance(abs_eps=0.0, rel_eps=1e-9)
        with pytest.raises(DomainError):
            Tolerance(abs_eps=1e-9, rel_eps=-1.0)

    def test_default(self):
        tol = default_tolerance()
        assert tol.abs_eps == 1e-9 and tol.rel_eps == 1e-9

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(TOLERANCE_ENV_VAR, "1e-3")
        tol = default_tolerance()
        assert tol.abs_eps == 1e-3 and tol.rel_eps == 1e-3
