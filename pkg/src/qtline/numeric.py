"""Exact arithmetic in real quadratic fields, plus the float tolerance policy.

Lattice data is kept exact: a :class:`QuadReal` is an element ``a + b*sqrt(D)``
of the field Q(sqrt(D)) with rational ``a, b`` and square-free ``D >= 2``.
Exactness matters because every irrationality/sign decision downstream (floors
for continued fractions, density arguments) must never be made in floating
point.  Analytic values (cocycle and theta evaluations) are ordinary ``complex``
floats compared through a single :class:`Tolerance` policy.

Signs of quadratic irrationals are decided by the conjugate trick: for mixed
signs of ``a`` and ``b``, ``a + b*sqrt(D)`` has the sign of ``a^2 - D*b^2``
relative to the dominant term, which is pure rational arithmetic.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

# The coefficient ring for QuadReal; stdlib Fraction already provides the
# normalized num/den representation.
Rational = Fraction

# Analytic values are plain double-precision complex numbers.
ComplexApprox = complex

TOLERANCE_ENV_VAR = "QTLINE_TOLERANCE"

# Bits of precision used when converting sqrt(D) to a rational approximation.
_SQRT_BITS = 200


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair used by every approximate comparison."""

    abs_eps: float = 1e-9
    rel_eps: float = 1e-9

    def __post_init__(self) -> None:
        if not (self.abs_eps > 0.0 and self.rel_eps > 0.0):
            raise DomainError("tolerances must be strictly positive")


def default_tolerance() -> Tolerance:
    """The library-wide default, overridable via the QTLINE_TOLERANCE env var.

    When set, the variable is parsed as a float and used for both the absolute
    and the relative epsilon.
    """
    raw = os.environ.get(TOLERANCE_ENV_VAR)
    if raw is None:
        return Tolerance()
    eps = float(raw)
    return Tolerance(abs_eps=eps, rel_eps=eps)


def approx_eq(x: complex, y: complex, tol: Tolerance | None = None) -> bool:
    """True iff ``|x - y| <= abs_eps + rel_eps * max(|x|, |y|)``."""
    if tol is None:
        tol = default_tolerance()
    return abs(x - y) <= tol.abs_eps + tol.rel_eps * max(abs(x), abs(y))


def _is_square_free(n: int) -> bool:
    if n % 4 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 2
    return True


def _sqrt_lower(d: int) -> Fraction:
    """Rational lower bound of sqrt(d) accurate to 2**-_SQRT_BITS."""
    scaled = math.isqrt(d << (2 * _SQRT_BITS))
    return Fraction(scaled, 1 << _SQRT_BITS)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadReal:
    """Exact element ``a + b*sqrt(d)`` of the real quadratic field Q(sqrt(d)).

    ``d`` must be square-free and >= 2, which makes the representation unique,
    so equality is componentwise.  Arithmetic with a plain ``int``/``Fraction``
    is allowed; arithmetic between two QuadReals requires equal ``d``.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if not isinstance(self.d, int) or self.d < 2 or not _is_square_free(self.d):
            raise DomainError(f"radicand must be a square-free integer >= 2, got {self.d!r}")

    @classmethod
    def rational(cls, value, d: int) -> QuadReal:
        return cls(_as_fraction(value), Fraction(0), d)

    @classmethod
    def sqrt(cls, d: int) -> QuadReal:
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other) -> QuadReal | None:
        if isinstance(other, QuadReal):
            if other.d != self.d:
                raise DomainError(f"mismatched radicands: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadReal.rational(other, self.d)
        return None

    def __add__(self, other) -> QuadReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadReal(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadReal:
        return QuadReal(-self.a, -self.b, self.d)

    def __sub__(self, other) -> QuadReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadReal:
        return (-self) + other

    def __mul__(self, other) -> QuadReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadReal(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadReal:
        return QuadReal(self.a, -self.b, self.d)

    @property
    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2 (the product with the conjugate)."""
        return self.a * self.a - self.d * self.b * self.b

    def reciprocal(self) -> QuadReal:
        n = self.norm
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        return QuadReal(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other) -> QuadReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other) -> QuadReal:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}, decided by rational arithmetic only."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (1 if a > 0 else 0)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Mixed signs: |a| vs |b|*sqrt(d) via squares.  Equality would force
        # sqrt(d) rational, impossible for square-free d >= 2.
        rational_part, sqrt_part = a * a, self.d * b * b
        if a > 0:
            return 1 if rational_part > sqrt_part else -1
        return 1 if sqrt_part > rational_part else -1

    def __bool__(self) -> bool:
        return not (self.a == 0 and self.b == 0)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare QuadReal with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __abs__(self) -> QuadReal:
        return -self if self.sign() < 0 else self

    def __floor__(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        n = math.floor(float(self))
        # Float guess is within 1 ulp; fix up with exact comparisons.
        while self < n:
            n -= 1
        while self >= n + 1:
            n += 1
        return n

    def __float__(self) -> float:
        if self.b == 0:
            return float(self.a)
        # a + b*s with s a 200-bit rational enclosure of sqrt(d); the final
        # Fraction->float conversion is correctly rounded.
        return float(self.a + self.b * _sqrt_lower(self.d))

    def __str__(self) -> str:
        return f"{self.a}{'+' if self.b >= 0 else ''}{self.b}*sqrt({self.d})"


def quad_to_float(x: QuadReal) -> float:
    """Double nearest to the exact value, off by at most a few ulp."""
    return float(x)
