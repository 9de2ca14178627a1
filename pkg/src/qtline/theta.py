"""Theta functions: entire solutions of theta(v + l) = A_l(v) * theta(v).

On a quantum torus a theta function can have no zeros (a zero would propagate
along a dense line), which forces the rigid shape

    theta(v) = amplitude * e^{2*pi*i*(u(v) + alpha*v)}

with u a polynomial exponent; :class:`ThetaCandidate` stores exactly that.

Solvability is equivalent to cohomological triviality of the cocycle within
the normal-form family, so the solver produces certificates instead of
searching: a nonzero Chern class or an off-circle character modulus rules out
solutions outright, while a triviality witness m yields the explicit solution

    theta(v) = e^{2*pi*i*(g(v) + alpha*v)},    alpha = (m - m0)/omega1,

where m0 is the principal-branch fold of the linear exponent coefficient.
The modulus obstruction is made quantitative by ``modulus_obstruction_demo``:
continued-fraction small vectors l_n -> 0 whose omega2-coefficients diverge
force |theta| to jump by unbounded factors |c|^{q_n} across vanishing
distances, so no continuous nonvanishing solution can exist when |c| != 1.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .cocycle import COEFF_BOUND, V_BOUND, Cocycle, ExponentPoly
from .errors import DomainError, PreconditionError, RangeError
from .numeric import Tolerance, default_tolerance
from .picard import TrivialityVerdict, reduce_to_constant, triviality_test
from .pseudolattice import LatticeVector

_TWO_PI_I = 2j * math.pi
_EXP_LIMIT = 700.0


@dataclass(frozen=True)
class ThetaCandidate:
    """theta(v) = amplitude * e^{2*pi*i*unit_exponent(v)} * e^{2*pi*i*alpha*v}."""

    amplitude: complex
    alpha: complex
    unit_exponent: ExponentPoly

    def __post_init__(self) -> None:
        if self.amplitude == 0:
            raise DomainError("amplitude must be nonzero (theta functions have no zeros)")

    def log_value(self, v: complex) -> complex:
        """Exponent E(v) with theta(v) = e^{2*pi*i*E(v)}, amplitude folded in."""
        return self.unit_exponent(v) + self.alpha * v + cmath.log(self.amplitude) / _TWO_PI_I

    def evaluate(self, v: complex) -> complex:
        z = _TWO_PI_I * self.log_value(v)
        if abs(z.real) > _EXP_LIMIT:
            raise RangeError(f"theta exponent {z:.6g} out of float exp range at v={v:.6g}")
        return cmath.exp(z)


def theta_residuals(a: Cocycle, t: ThetaCandidate, samples: int = 100, seed: int = 0) -> list[float]:
    """Per-sample relative residuals of theta(v+l) = A_l(v) theta(v).

    Uses the same exponent-space formulation as the cocycle verifier, so huge
    |theta| cannot overflow: |theta(v+l) - A theta(v)| / max(1, |theta(v+l)|)
    = min(1, |theta(v+l)|) * |1 - e^{2*pi*i*(y - x)}| for the two exponents.
    """
    if samples < 1:
        raise PreconditionError("need samples >= 1")
    rng = random.Random(seed)
    lat = a.lattice
    w1, w2 = lat.omega1_float, lat.omega2_float
    out = []
    for _ in range(samples):
        l = LatticeVector(rng.randint(-COEFF_BOUND, COEFF_BOUND), rng.randint(-COEFF_BOUND, COEFF_BOUND))
        v = complex(rng.uniform(-V_BOUND, V_BOUND), rng.uniform(-V_BOUND, V_BOUND))
        lval = l.a * w1 + l.b * w2
        x = t.log_value(v + lval)
        y = a.exponent(l, v) + t.log_value(v)
        scale = 1.0 if x.imag <= 0.0 else math.exp(-2.0 * math.pi * x.imag)
        out.append(min(1.0, scale) * abs(1.0 - cmath.exp(_TWO_PI_I * (y - x))))
    return out


def theta_residual(a: Cocycle, t: ThetaCandidate, samples: int = 100, seed: int = 0) -> float:
    """Max of :func:`theta_residuals`."""
    return max(theta_residuals(a, t, samples=samples, seed=seed))


@dataclass(frozen=True)
class ThetaSolveResult:
    """Either an explicit solution or a machine-checkable non-existence verdict."""

    candidate: ThetaCandidate | None
    verdict: TrivialityVerdict

    @property
    def solved(self) -> bool:
        return self.candidate is not None


def solve_theta(a: Cocycle, bound: int = 10_000, tol: Tolerance | None = None) -> ThetaSolveResult:
    """Solve the functional equation for a, or certify there is no solution.

    Delegates solvability to the bounded triviality test; a trivial verdict
    with witness m is turned into the explicit exponential solution.  An
    unknown verdict is returned as-is (candidate None, status "unknown").
    """
    verdict = triviality_test(a, bound=bound, tol=tol)
    if not verdict.is_trivial:
        return ThetaSolveResult(candidate=None, verdict=verdict)
    lat = a.lattice
    g1 = a.g.linear_coefficient
    phi = reduce_to_constant(a)
    # Principal-branch fold: log(e^{2*pi*i*g1*omega1}) = 2*pi*i*(g1*omega1 - m0).
    fold = g1 * lat.omega1_float - cmath.log(phi.phi_omega1) / _TWO_PI_I
    m0 = round(fold.real)
    alpha = (verdict.witness - m0) / lat.omega1_float
    candidate = ThetaCandidate(amplitude=1.0 + 0j, alpha=alpha, unit_exponent=a.g)
    return ThetaSolveResult(candidate=candidate, verdict=verdict)


@dataclass(frozen=True)
class ObstructionWitness:
    """Small lattice vectors with the diverging modulus factors they force."""

    vectors: tuple[LatticeVector, ...]
    factors: tuple[float, ...]
    modulus: float


def modulus_obstruction_demo(a: Cocycle, terms: int = 6, tol: Tolerance | None = None) -> ObstructionWitness:
    """Quantitative no-solution witness for s = 0, |c| != 1.

    Returns small vectors l_n = (p_n, -q_n) together with the factors
    max(|c|, 1/|c|)^{q_n} by which |theta| would have to jump across the
    vanishing distances |l_n|.  Convergents with repeated denominators (the
    golden-ratio start q_0 = q_1) are skipped so the factors are strictly
    increasing; terms whose factor would overflow a double are dropped.
    """
    if tol is None:
        tol = default_tolerance()
    if a.s != 0:
        raise PreconditionError("modulus obstruction applies to zero Chern class only")
    modulus = abs(a.c)
    if abs(modulus - 1.0) <= tol.abs_eps:
        raise PreconditionError("|c| = 1: the modulus argument yields no obstruction")
    growth = abs(math.log(modulus))
    vectors: list[LatticeVector] = []
    factors: list[float] = []
    last_q = 0
    for vec in a.lattice.small_vectors(max(terms * 3, terms + 4)):
        q = -vec.b
        if q <= last_q:
            continue
        if q * growth > _EXP_LIMIT:
            break
        vectors.append(vec)
        factors.append(math.exp(q * growth))
        last_q = q
        if len(vectors) == terms:
            break
    return ObstructionWitness(vectors=tuple(vectors), factors=tuple(factors), modulus=modulus)
