"""Pseudolattices L = Z*omega1 + Z*omega2, dense rank-two subgroups of R.

Unlike a lattice in C, a pseudolattice is dense in R whenever theta =
omega2/omega1 is irrational; everything in this library hinges on that
density.  The quantitative form is supplied by continued fractions: the
convergents p_n/q_n of theta give lattice vectors p_n*omega1 - q_n*omega2
that tend to zero while their omega2-coefficients blow up.  Each convergent
satisfies

    |p_n*omega1 - q_n*omega2| < |omega1| / q_n,

which is checkable both in floats and by exact sign tests on QuadReal.

The continued fraction is computed with exact floors in Q(sqrt(D)); floats
mis-floor near integers, and a single wrong partial quotient corrupts every
convergent after it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, PreconditionError
from .numeric import QuadReal


@dataclass(frozen=True)
class LatticeVector:
    """Integer coordinates (a, b) of the lattice point a*omega1 + b*omega2."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise DomainError("lattice coordinates must be integers")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.a + other.a, self.b + other.b)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-self.a, -self.b)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(self.a - other.a, self.b - other.b)


@dataclass(frozen=True)
class Convergent:
    """Continued-fraction convergent p/q of theta, in lowest terms.

    Denominators are nondecreasing and strictly increasing from index 1 on
    (q_0 = q_1 = 1 happens when the first partial quotient is 1, e.g. for the
    golden ratio).
    """

    p: int
    q: int
    index: int


@dataclass(frozen=True)
class Pseudolattice:
    """L = Z*omega1 + Z*omega2 with omega1, omega2 in one real quadratic field.

    Construction verifies, exactly, that omega1 != 0 and that theta =
    omega2/omega1 is irrational (so L is dense in R rather than discrete).
    """

    omega1: QuadReal
    omega2: QuadReal
    omega1_float: float = field(init=False, repr=False, compare=False)
    omega2_float: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.omega1.d != self.omega2.d:
            raise DomainError("omega1 and omega2 must live in the same quadratic field")
        if not self.omega1:
            raise DomainError("omega1 must be nonzero")
        if (self.omega2 / self.omega1).is_rational:
            raise DomainError("omega2/omega1 is rational; the subgroup is not dense in R")
        object.__setattr__(self, "omega1_float", float(self.omega1))
        object.__setattr__(self, "omega2_float", float(self.omega2))

    @property
    def d(self) -> int:
        return self.omega1.d

    @property
    def theta_exact(self) -> QuadReal:
        """The slope theta = omega2/omega1 as an exact field element."""
        return self.omega2 / self.omega1

    @property
    def theta(self) -> float:
        return float(self.theta_exact)

    def real_value(self, l: LatticeVector) -> QuadReal:
        return self.omega1 * l.a + self.omega2 * l.b

    def cf_terms(self, n: int) -> list[int]:
        """First n partial quotients of theta, via exact floors."""
        if n < 1:
            raise PreconditionError("need n >= 1")
        x = self.theta_exact
        terms = []
        for _ in range(n):
            k = math.floor(x)
            terms.append(k)
            # theta irrational => every tail is irrational, so x - k never
            # vanishes and the expansion never terminates.
            x = (x - k).reciprocal()
        return terms

    def convergents(self, n: int) -> list[Convergent]:
        """First n convergents p_k/q_k of theta (k = 0 .. n-1)."""
        terms = self.cf_terms(n)
        out: list[Convergent] = []
        p_prev, p = 1, terms[0]
        q_prev, q = 0, 1
        out.append(Convergent(p, q, 0))
        for k, a in enumerate(terms[1:], start=1):
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
            out.append(Convergent(p, q, k))
        return out

    def small_vectors(self, n: int) -> list[LatticeVector]:
        """Vectors (p_k, -q_k) whose real values p_k*omega1 - q_k*omega2
        shrink strictly to zero while |q_k| grows."""
        return [LatticeVector(c.p, -c.q) for c in self.convergents(n)]

    def approximate_real(self, target: float, eps: float = 1e-3, max_terms: int = 60) -> LatticeVector:
        """A lattice vector whose real value is within eps of target.

        Greedy descent on the small-vector sequence: repeatedly subtract the
        largest small vector not exceeding the remaining gap.  Density of L
        guarantees termination for any eps > 0.
        """
        if eps <= 0:
            raise PreconditionError("need eps > 0")
        vectors = self.small_vectors(max_terms)
        values = [float(self.real_value(v)) for v in vectors]
        acc = LatticeVector(0, 0)
        remaining = target
        for vec, val in zip(vectors, values):
            if abs(remaining) <= eps:
                break
            if val == 0.0 or abs(val) > abs(remaining):
                continue
            count = int(remaining / val)
            if count == 0:
                continue
            acc = LatticeVector(acc.a + count * vec.a, acc.b + count * vec.b)
            remaining -= count * val
        if abs(remaining) > eps:
            raise PreconditionError(
                f"could not reach {target} within {eps} using {max_terms} convergents"
            )
        return acc


def lattice_sqrt2() -> Pseudolattice:
    """Canonical fixture L1 = Z + Z*sqrt(2)."""
    return Pseudolattice(QuadReal.rational(1, 2), QuadReal.sqrt(2))


def lattice_golden() -> Pseudolattice:
    """Canonical fixture L2 = Z + Z*(1+sqrt(5))/2."""
    return Pseudolattice(
        QuadReal.rational(1, 5),
        QuadReal(Fraction(1, 2), Fraction(1, 2), 5),
    )
