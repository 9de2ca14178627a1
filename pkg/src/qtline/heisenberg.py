"""Translation stabilizers, the Heisenberg group, and the commutator pairing.

A translation by x fixes the isomorphism class of the bundle of a cocycle A
exactly when the ratio A_l(v + x~)/A_l(v) is a coboundary h(v+l)/h(v); the
group of such x is K.  For a cocycle with Chern integer s != 0 the lifts of K
to R form (1/|s|)L, so a lift is stored as a :class:`LambdaPoint`
(alpha*omega1 + beta*omega2)/|s|; reduction mod L acts on (alpha, beta) mod
|s| and K has order s^2.  For s = 0 every real translation qualifies and K is
the whole torus.

For the normal form with g = 0 the multiplier of a lift x~ = (alpha, beta)/|s|
is, up to a constant,

    h(v) = e^{(2*pi*i/omega1) * sign(s) * beta * v},

normalized so h(0) = 1; the leftover constant is the C^x component of a
:class:`HeisenbergElement`.  The group law is

    (x1, h1) . (x2, h2) = (x1 + x2, h2(v + x1~) * h1(v)),

a central extension of K by C^x.  Its commutator descends to the alternating
pairing

    e(x1, x2) = H_v(x1~, x2~) / H_v(x2~, x1~),   H_v(x~, y~) = h_y(v + x~)/h_y(v),

whose value is the root of unity e^{2*pi*i*(alpha1*beta2 - alpha2*beta1)/s}.
The pairing is computed here by numerically evaluating H_v at two fixed base
points and requiring agreement, so any branch or normalization bug shows up
as a v-dependence rather than a silently wrong constant.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .chern import chern_symbolic
from .cocycle import Cocycle, ExponentPoly
from .errors import ConsistencyError, DomainError, PreconditionError
from .numeric import Tolerance, approx_eq, default_tolerance
from .pseudolattice import LatticeVector, Pseudolattice

_TWO_PI_I = 2j * math.pi

# Fixed base points for the v-independence cross-check.
_V_PROBE_1 = 0.3 + 0.2j
_V_PROBE_2 = 1.7 - 0.9j


@dataclass(frozen=True)
class LambdaPoint:
    """Lift x~ = (alpha*omega1 + beta*omega2)/s of a torus point, s >= 1."""

    alpha: int
    beta: int
    s: int

    def __post_init__(self) -> None:
        if not (isinstance(self.s, int) and self.s >= 1):
            raise DomainError("LambdaPoint denominator must be a positive integer")
        if not (isinstance(self.alpha, int) and isinstance(self.beta, int)):
            raise DomainError("LambdaPoint coordinates must be integers")

    def real_value(self, lattice: Pseudolattice) -> float:
        exact = (lattice.omega1 * self.alpha + lattice.omega2 * self.beta) * Fraction(1, self.s)
        return float(exact)

    def __add__(self, other: LambdaPoint) -> LambdaPoint:
        if self.s != other.s:
            raise DomainError("cannot add lifts with different denominators")
        return LambdaPoint(self.alpha + other.alpha, self.beta + other.beta, self.s)

    def __neg__(self) -> LambdaPoint:
        return LambdaPoint(-self.alpha, -self.beta, self.s)

    def reduced(self) -> LambdaPoint:
        """Representative of the same torus point with coordinates in [0, s)."""
        return LambdaPoint(self.alpha % self.s, self.beta % self.s, self.s)

    @property
    def is_lattice_point(self) -> bool:
        return self.alpha % self.s == 0 and self.beta % self.s == 0


@dataclass(frozen=True)
class KGroupDescription:
    """Either the finite group (Z/sZ)^2 or the full torus."""

    finite: bool
    modulus: int | None = None

    @classmethod
    def finite_group(cls, modulus: int) -> KGroupDescription:
        return cls(finite=True, modulus=modulus)

    @classmethod
    def full_torus(cls) -> KGroupDescription:
        return cls(finite=False, modulus=None)

    @property
    def order(self) -> int | None:
        return self.modulus * self.modulus if self.finite else None


@dataclass(frozen=True)
class HeisenbergElement:
    """Pair (x~, h) with h(0) = 1 forced; scalar carries the C^x part.

    The unit part of the multiplier is e^{(2*pi*i/omega1)*kappa*v} with kappa
    = sign(s)*beta determined by the point, so the pair (point, scalar) is the
    whole datum.
    """

    point: LambdaPoint
    scalar: complex

    def __post_init__(self) -> None:
        if self.scalar == 0:
            raise DomainError("central scalar must be nonzero")


def k_group(a: Cocycle) -> KGroupDescription:
    s = chern_symbolic(a).s
    if s == 0:
        return KGroupDescription.full_torus()
    return KGroupDescription.finite_group(abs(s))


def _require_normal_form(a: Cocycle) -> None:
    if a.s == 0:
        raise PreconditionError("operation needs a cocycle with nonzero Chern class")
    if a.g:
        raise PreconditionError("operation needs normal form g = 0; strip the coboundary first")


def _check_point(a: Cocycle, x: LambdaPoint) -> None:
    if x.s != abs(a.s):
        raise DomainError(
            f"lift denominator {x.s} does not match the stabilizer lattice (1/{abs(a.s)})L"
        )


def _kappa(a: Cocycle, x: LambdaPoint) -> int:
    return x.beta if a.s > 0 else -x.beta


def multiplier_value(a: Cocycle, elem: HeisenbergElement, v: complex) -> complex:
    """Value of the full multiplier h at v (scalar times the unit part)."""
    kappa = _kappa(a, elem.point)
    return elem.scalar * cmath.exp(_TWO_PI_I * kappa * v / a.lattice.omega1_float)


def membership_multiplier(a: Cocycle, x: LambdaPoint) -> HeisenbergElement:
    """The normalized multiplier witnessing that x stabilizes the class of a.

    Satisfies A_l(v + x~)/A_l(v) = h(v+l)/h(v) for every l; see
    ``multiplier_residual`` for the numerical check.
    """
    _require_normal_form(a)
    _check_point(a, x)
    return HeisenbergElement(point=x, scalar=1.0 + 0j)


def multiplier_residual(a: Cocycle, elem: HeisenbergElement, samples: int = 50, seed: int = 0) -> float:
    """Max residual of A_l(v+x~)/A_l(v) = h(v+l)/h(v) over seeded samples."""
    rng = random.Random(seed)
    lat = a.lattice
    w1, w2 = lat.omega1_float, lat.omega2_float
    xval = elem.point.real_value(lat)
    worst = 0.0
    for _ in range(samples):
        l = LatticeVector(rng.randint(-5, 5), rng.randint(-5, 5))
        v = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lval = l.a * w1 + l.b * w2
        lhs = a.evaluate(l, v + xval) / a.evaluate(l, v)
        rhs = multiplier_value(a, elem, v + lval) / multiplier_value(a, elem, v)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst


def heisenberg_multiply(g1: HeisenbergElement, g2: HeisenbergElement, a: Cocycle) -> HeisenbergElement:
    """(x1, h1).(x2, h2) = (x1+x2, h2(v+x1~)h1(v)), renormalized to h(0) = 1."""
    _require_normal_form(a)
    _check_point(a, g1.point)
    _check_point(a, g2.point)
    point = g1.point + g2.point
    kappa2 = _kappa(a, g2.point)
    x1val = g1.point.real_value(a.lattice)
    if kappa2 == 0:
        carried = 1.0 + 0j
    else:
        carried = cmath.exp(_TWO_PI_I * kappa2 * x1val / a.lattice.omega1_float)
    return HeisenbergElement(point=point, scalar=g1.scalar * g2.scalar * carried)


def heisenberg_identity(a: Cocycle) -> HeisenbergElement:
    return HeisenbergElement(point=LambdaPoint(0, 0, abs(a.s)), scalar=1.0 + 0j)


def heisenberg_inverse(g: HeisenbergElement, a: Cocycle) -> HeisenbergElement:
    """Inverse (-x, h(v - x~)^{-1}) in the normalized representation."""
    _require_normal_form(a)
    _check_point(a, g.point)
    kappa = _kappa(a, g.point)
    xval = g.point.real_value(a.lattice)
    carried = cmath.exp(_TWO_PI_I * kappa * xval / a.lattice.omega1_float)
    return HeisenbergElement(point=-g.point, scalar=carried / g.scalar)


def closed_form_pairing(a: Cocycle, x1: LambdaPoint, x2: LambdaPoint) -> complex:
    """e^{2*pi*i*(alpha1*beta2 - alpha2*beta1)/s} with the signed s of the cocycle."""
    if a.s == 0:
        raise PreconditionError("closed form needs a nonzero Chern class")
    _check_point(a, x1)
    _check_point(a, x2)
    cross = x1.alpha * x2.beta - x2.alpha * x1.beta
    return cmath.exp(_TWO_PI_I * cross / a.s)


def commutator_pairing(
    a: Cocycle,
    x1: LambdaPoint,
    x2: LambdaPoint,
    tol: Tolerance | None = None,
) -> complex:
    """The pairing via H_v ratios, cross-checked at two base points.

    Works on any cocycle with s != 0: the character part cancels in
    A_l(v+x~)/A_l(v) and the coboundary part is stripped first, so only the
    quadratic-exponent block matters.
    """
    if tol is None:
        tol = default_tolerance()
    if a.s == 0:
        raise PreconditionError("commutator pairing needs a nonzero Chern class")
    stripped = Cocycle(a.s, a.c, ExponentPoly.zero(), a.lattice)
    _check_point(stripped, x1)
    _check_point(stripped, x2)
    e1 = membership_multiplier(stripped, x1)
    e2 = membership_multiplier(stripped, x2)
    x1val = x1.real_value(a.lattice)
    x2val = x2.real_value(a.lattice)

    def pairing_at(v: complex) -> complex:
        h12 = multiplier_value(stripped, e2, v + x1val) / multiplier_value(stripped, e2, v)
        h21 = multiplier_value(stripped, e1, v + x2val) / multiplier_value(stripped, e1, v)
        return h12 / h21

    first = pairing_at(_V_PROBE_1)
    second = pairing_at(_V_PROBE_2)
    if not approx_eq(first, second, tol):
        raise ConsistencyError(
            f"commutator pairing depends on the base point: {first} vs {second}"
        )
    return first


def _pairing_trivial_chern(a: Cocycle, x1val: float, x2val: float, v: complex) -> complex:
    """Pairing for s = 0 through the symmetric H_v expression
    h(v+x1~+x2~)h(v) / (h(v+x1~)h(v+x2~)) with h the cocycle's own unit.

    Evaluated in exponent space (the individual h values can leave the float
    range); the two argument orders are genuinely different float expressions,
    so this remains a nonvacuous numerical check of the symmetry.
    """
    g = a.g

    def log_h_v(first: float, second: float) -> complex:
        return g(v + first + second) + g(v) - g(v + first) - g(v + second)

    return cmath.exp(_TWO_PI_I * (log_h_v(x1val, x2val) - log_h_v(x2val, x1val)))


@dataclass(frozen=True)
class DichotomyReport:
    """One-branch summary tying the Chern class, K, and the pairing together."""

    chern_s: int
    k_group: KGroupDescription
    witness_pair: tuple[LambdaPoint, LambdaPoint] | None
    witness_value: complex | None
    witness_differs_from_one: bool | None
    max_pairing_deviation: float | None


def dichotomy_check(a: Cocycle, samples: int = 100, seed: int = 0, tol: Tolerance | None = None) -> DichotomyReport:
    """Exhibit whichever side of the finite/full-torus dichotomy applies.

    Nonzero Chern class: K is finite of order s^2 and the lift pair
    (omega1/s, omega2/s) realizes the pairing value e^{2*pi*i/s}.  Note that
    for |s| = 1 that value equals 1 — K is then the trivial group and the
    pairing cannot distinguish anything.

    Zero Chern class: K is the full torus and the pairing is identically 1;
    the report carries the max deviation from 1 over sampled lift pairs.
    """
    if tol is None:
        tol = default_tolerance()
    s = chern_symbolic(a).s
    group = k_group(a)
    if s != 0:
        x1 = LambdaPoint(1, 0, abs(s))
        x2 = LambdaPoint(0, 1, abs(s))
        value = commutator_pairing(a, x1, x2, tol=tol)
        return DichotomyReport(
            chern_s=s,
            k_group=group,
            witness_pair=(x1, x2),
            witness_value=value,
            witness_differs_from_one=abs(value - 1.0) > tol.abs_eps,
            max_pairing_deviation=None,
        )
    rng = random.Random(seed)
    lat = a.lattice
    worst = 0.0
    for _ in range(samples):
        den = rng.randint(1, 6)
        p1 = LambdaPoint(rng.randint(-5, 5), rng.randint(-5, 5), den)
        p2 = LambdaPoint(rng.randint(-5, 5), rng.randint(-5, 5), den)
        v = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        value = _pairing_trivial_chern(a, p1.real_value(lat), p2.real_value(lat), v)
        worst = max(worst, abs(value - 1.0))
    return DichotomyReport(
        chern_s=0,
        k_group=group,
        witness_pair=None,
        witness_value=None,
        witness_differs_from_one=None,
        max_pairing_deviation=worst,
    )
