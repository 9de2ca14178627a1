"""Finite normal forms for the nonvanishing-holomorphic cocycles of a
pseudolattice, i.e. families A_l(v) with

    A_{l1+l2}(v) = A_{l1}(v + l2) * A_{l2}(v).

A general such family cannot be stored in finite data, so this module
represents exactly the subgroup generated by three kinds of building blocks,
which is enough to hit every cohomology class:

* the quadratic-exponent sections  sigma_s: A_l(v) = e^{s(pi*i/omega1)[b^2*omega2 + 2bv]},
* characters  gamma_c: A_l(v) = c^b,
* coboundaries h(v+l)/h(v) of units h = e^{2*pi*i*g(v)} with polynomial g.

A :class:`Cocycle` is the triple (s, c, g) for the product of one block of
each kind, over a fixed :class:`Pseudolattice`, where l = a*omega1 + b*omega2.
Every exponent in the library is normalized as e^{2*pi*i*(...)} so that the
cocycle identity becomes an integrality statement on exponents: the defect

    a(l1+l2, v) - a(l1, v+l2) - a(l2, v)

equals the integer -s * b1 * a2 identically (characters and coboundaries
contribute zero).  ``cocycle_defect`` returns that closed form and the
numerical verifier checks it at samples.

Branch convention: log(c) is taken once, on the principal branch, at
construction time, so repeated evaluation is branch-stable.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field

from .errors import DomainError, PreconditionError, RangeError
from .pseudolattice import LatticeVector, Pseudolattice

# Hard cap on exponent-polynomial degree: keeps |exponents| small enough that
# double-precision evaluation stays meaningful on the sampling domains below.
MAX_DEGREE = 6

# Shared sampling domain for the numerical verifiers.
COEFF_BOUND = 10
V_BOUND = 5.0

# Largest |Re z| fed to exp() before raising RangeError.
_EXP_LIMIT = 700.0

_TWO_PI_I = 2j * math.pi
_INV_TWO_PI_I = 1.0 / _TWO_PI_I


@dataclass(frozen=True)
class ExponentPoly:
    """Polynomial g(v) = sum g_j v^j with complex coefficients, low degree first.

    Trailing zeros are stripped, so structural equality is well defined; the
    zero polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        cs = [complex(z) for z in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) - 1 > MAX_DEGREE:
            raise DomainError(f"exponent polynomial degree {len(cs) - 1} exceeds cap {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> ExponentPoly:
        return cls(())

    @classmethod
    def linear(cls, slope: complex, constant: complex = 0.0) -> ExponentPoly:
        return cls((constant, slope))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def linear_coefficient(self) -> complex:
        return self.coeffs[1] if len(self.coeffs) > 1 else 0j

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, v: complex) -> complex:
        acc = 0j
        for coef in reversed(self.coeffs):
            acc = acc * v + coef
        return acc

    def __add__(self, other: ExponentPoly) -> ExponentPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, coef in enumerate(b):
            merged[i] += coef
        return ExponentPoly(tuple(merged))

    def __neg__(self) -> ExponentPoly:
        return ExponentPoly(tuple(-z for z in self.coeffs))

    def __sub__(self, other: ExponentPoly) -> ExponentPoly:
        return self + (-other)


@dataclass(frozen=True)
class Cocycle:
    """Normal form (s, c, g): the cocycle

        A_l(v) = c^b * e^{s(pi*i/omega1)[b^2*omega2 + 2bv]} * e^{2*pi*i(g(v+l) - g(v))}

    for l = a*omega1 + b*omega2.  The cocycle identity holds by construction.
    """

    s: int
    c: complex
    g: ExponentPoly
    lattice: Pseudolattice
    _log_c: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.s, int):
            raise DomainError("s must be an integer")
        c = complex(self.c)
        if c == 0 or not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise DomainError("character value c must be finite and nonzero")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "_log_c", cmath.log(c))

    def exponent(self, l: LatticeVector, v: complex) -> complex:
        """Closed-form exponent a(l, v) with A_l(v) = e^{2*pi*i*a(l, v)}.

        The character contributes (b*log c)/(2*pi*i) on the stored branch.
        """
        lat = self.lattice
        w1, w2 = lat.omega1_float, lat.omega2_float
        total = 0j
        if self._log_c != 0:
            total += l.b * self._log_c * _INV_TWO_PI_I
        if self.s:
            total += self.s * (l.b * l.b * w2 + 2.0 * l.b * v) / (2.0 * w1)
        if self.g:
            shift = l.a * w1 + l.b * w2
            total += self.g(v + shift) - self.g(v)
        return total

    def evaluate(self, l: LatticeVector, v: complex) -> complex:
        """Numerical value A_l(v); always nonzero."""
        z = _TWO_PI_I * self.exponent(l, v)
        if abs(z.real) > _EXP_LIMIT:
            raise RangeError(f"cocycle exponent {z:.6g} out of float exp range at l=({l.a},{l.b}), v={v:.6g}")
        return cmath.exp(z)

    def tensor(self, other: Cocycle) -> Cocycle:
        """Componentwise product; realizes the tensor product of bundles."""
        if self.lattice != other.lattice:
            raise DomainError("tensor requires cocycles over the same pseudolattice")
        return Cocycle(self.s + other.s, self.c * other.c, self.g + other.g, self.lattice)

    def inverse(self) -> Cocycle:
        return Cocycle(-self.s, 1.0 / self.c, -self.g, self.lattice)


def trivial_cocycle(lattice: Pseudolattice) -> Cocycle:
    return Cocycle(0, 1.0, ExponentPoly.zero(), lattice)


def existence_cocycle(lattice: Pseudolattice) -> Cocycle:
    """The classical nontrivial example e^{-(pi*i/omega1)[b^2*omega2 + 2bv]}.

    This is the s = -1 quadratic-exponent section.  Note the orientation: with
    the opposite relative sign on the 2bv term the family would fail the
    cocycle identity outright (the defect picks up the irrational term
    -2*b1*b2*theta), so the sign written here is the only consistent one.
    """
    return Cocycle(-1, 1.0, ExponentPoly.zero(), lattice)


def coboundary(g: ExponentPoly, beta: complex = 0.0, lattice: Pseudolattice | None = None) -> Cocycle:
    """The cohomologically trivial cocycle h(v+l)/h(v) of h = e^{2*pi*i(g(v) + beta*v)}.

    The linear part beta*v acts on lattice points as the character
    l -> e^{2*pi*i*beta*l}; it is stored as the degree-1 coefficient of the
    exponent polynomial, which represents that character exactly.
    """
    if lattice is None:
        raise DomainError("coboundary requires a pseudolattice")
    full = g + ExponentPoly.linear(beta) if beta != 0 else g
    return Cocycle(0, 1.0, full, lattice)


def cocycle_defect(a: Cocycle, l1: LatticeVector, l2: LatticeVector) -> int:
    """Exact integer value of a(l1+l2, v) - a(l1, v+l2) - a(l2, v)."""
    return -a.s * l1.b * l2.a


def cocycle_identity_residuals(a: Cocycle, samples: int = 100, seed: int = 0) -> list[float]:
    """Per-sample relative residuals of A_{l1+l2}(v) = A_{l1}(v+l2) * A_{l2}(v)
    at seeded samples with |coords| <= 10 and v in the square [-5, 5]^2.

    Computed in exponent space:  with x, y the exponents of the two sides the
    residual |A - B| / max(1, |A|) equals min(1, |A|) * |1 - e^{2*pi*i(y-x)}|,
    which stays finite even where |A| itself overflows a double.
    """
    if samples < 1:
        raise PreconditionError("need samples >= 1")
    rng = random.Random(seed)
    lat = a.lattice
    w1, w2 = lat.omega1_float, lat.omega2_float
    out = []
    for _ in range(samples):
        l1 = LatticeVector(rng.randint(-COEFF_BOUND, COEFF_BOUND), rng.randint(-COEFF_BOUND, COEFF_BOUND))
        l2 = LatticeVector(rng.randint(-COEFF_BOUND, COEFF_BOUND), rng.randint(-COEFF_BOUND, COEFF_BOUND))
        v = complex(rng.uniform(-V_BOUND, V_BOUND), rng.uniform(-V_BOUND, V_BOUND))
        x = a.exponent(l1 + l2, v)
        y = a.exponent(l1, v + (l2.a * w1 + l2.b * w2)) + a.exponent(l2, v)
        defect = y - x
        scale = 1.0 if x.imag <= 0.0 else math.exp(-2.0 * math.pi * x.imag)
        out.append(min(1.0, scale) * abs(1.0 - cmath.exp(_TWO_PI_I * defect)))
    return out


def verify_cocycle_identity(a: Cocycle, samples: int = 100, seed: int = 0) -> float:
    """Max of :func:`cocycle_identity_residuals`; zero exactly for the trivial cocycle."""
    return max(cocycle_identity_residuals(a, samples=samples, seed=seed))
