"""Chern-trivial classes, triviality certificates, and the Appell-Humbert
style normal form.

Every cocycle in the normal-form family with s = 0 is cohomologous to a
*constant* cocycle, i.e. to a homomorphism L -> C^x: dividing out the
coboundary of e^{2*pi*i*g_{>=2}(v)} strips the nonlinear exponent part, while
the linear part g_1*v survives as the character l -> e^{2*pi*i*g_1*l}.
``reduce_to_constant`` returns that character on the basis.

A character phi is a coboundary exactly when phi(l) = k^l for one complex k.
After normalizing phi(omega1) to 1 (multiply by k^l for k = phi(omega1)^{-1},
powers taken on the principal branch), what remains of the class is the single
number phihat(omega2) in C^x — the Pic^0 invariant.  The normalized character
is a coboundary iff phihat(omega2) = e^{2*pi*i*m*theta} for some integer m;
``triviality_test`` searches |m| <= bound and returns a three-valued verdict,
since unit-circle membership in the dense subgroup {e^{2*pi*i*m*theta}} cannot
be decided numerically without a bound.

Branch caveat, by design: a different branch of log phi(omega1) shifts the
invariant by a factor e^{2*pi*i*m*theta}.  The library always computes the
principal-branch representative and exposes the ambiguity class through
triviality witnesses; multiplicativity of the invariant therefore holds
exactly only when the principal branch is additive on the arguments involved.

The normal form of an arbitrary cocycle is the pair (chi, E): E is the Chern
form, and chi is the semicharacter gamma_c * chi_E on the basis, where
chi_E(a*omega1 + b*omega2) = e^{pi*i*s*a*b} and c is the Pic^0 invariant of
the class divided by its quadratic-exponent section.  chi satisfies

    chi(l1 + l2) = chi(l1) * chi(l2) * e^{pi*i*E(l1, l2)}

(with pi*i, not 2*pi*i, in the exponent: the latter would be identically 1 on
an integral form and carry no information).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .chern import AltForm, chern_symbolic, sigma_section
from .cocycle import Cocycle, ExponentPoly
from .errors import DomainError, PreconditionError
from .numeric import Tolerance, default_tolerance
from .pseudolattice import LatticeVector, Pseudolattice

_TWO_PI_I = 2j * math.pi

DEFAULT_WITNESS_BOUND = 10_000


@dataclass(frozen=True)
class Character:
    """Homomorphism L -> C^x, stored by its values on the basis."""

    phi_omega1: complex
    phi_omega2: complex
    lattice: Pseudolattice

    def __post_init__(self) -> None:
        if self.phi_omega1 == 0 or self.phi_omega2 == 0:
            raise DomainError("character values must be nonzero")

    def __call__(self, l: LatticeVector) -> complex:
        return self.phi_omega1**l.a * self.phi_omega2**l.b


@dataclass(frozen=True)
class TrivialityVerdict:
    """Outcome of a bounded triviality test.

    status is one of "trivial", "nontrivial", "unknown".  A trivial verdict
    carries the witness integer m with phihat(omega2) = e^{2*pi*i*m*theta};
    a nontrivial verdict carries a human-readable certificate reason; an
    unknown verdict records the exhausted search bound.
    """

    status: str
    witness: int | None = None
    reason: str | None = None
    bound: int | None = None

    @classmethod
    def trivial(cls, witness: int) -> TrivialityVerdict:
        return cls(status="trivial", witness=witness)

    @classmethod
    def nontrivial(cls, reason: str) -> TrivialityVerdict:
        return cls(status="nontrivial", reason=reason)

    @classmethod
    def unknown(cls, bound: int) -> TrivialityVerdict:
        return cls(status="unknown", bound=bound)

    @property
    def is_trivial(self) -> bool:
        return self.status == "trivial"

    @property
    def is_nontrivial(self) -> bool:
        return self.status == "nontrivial"


REASON_NONZERO_CHERN = "nonzero Chern class"
REASON_MODULUS = "character modulus off the unit circle"


def reduce_to_constant(a: Cocycle) -> Character:
    """Constant cocycle cohomologous to a (requires Chern class zero).

    The nonlinear part of g is stripped as a coboundary; the linear
    coefficient g_1 folds into the character values on the basis:
    phi(omega1) = e^{2*pi*i*g_1*omega1}, phi(omega2) = c * e^{2*pi*i*g_1*omega2}.
    """
    if chern_symbolic(a).s != 0:
        raise PreconditionError("reduce_to_constant needs a cocycle with zero Chern class")
    lat = a.lattice
    g1 = a.g.linear_coefficient
    phi1 = cmath.exp(_TWO_PI_I * g1 * lat.omega1_float)
    phi2 = a.c * cmath.exp(_TWO_PI_I * g1 * lat.omega2_float)
    return Character(phi1, phi2, lat)


def character_cocycle(phi: Character) -> Cocycle:
    """Lift a character back to a normal-form cocycle with the same values.

    phi(omega1)^a enters through the linear exponent coefficient
    log(phi(omega1)) / (2*pi*i*omega1); the residue goes into the c slot so
    that evaluation reproduces phi(omega1)^a * phi(omega2)^b exactly.
    """
    lat = phi.lattice
    log1 = cmath.log(phi.phi_omega1)
    if log1 == 0:
        return Cocycle(0, phi.phi_omega2, ExponentPoly.zero(), lat)
    slope = log1 / (_TWO_PI_I * lat.omega1_float)
    c = phi.phi_omega2 * cmath.exp(-lat.theta * log1)
    return Cocycle(0, c, ExponentPoly.linear(slope), lat)


def pic0_invariant(a: Cocycle) -> complex:
    """phihat(omega2) after the principal-branch normalization phihat(omega1) = 1.

    For the pure character cocycle (0, c, 0) this returns c exactly.
    """
    phi = reduce_to_constant(a)
    log1 = cmath.log(phi.phi_omega1)
    return phi.phi_omega2 * cmath.exp(-phi.lattice.theta * log1)


def triviality_test(
    a: Cocycle,
    bound: int = DEFAULT_WITNESS_BOUND,
    tol: Tolerance | None = None,
) -> TrivialityVerdict:
    """Decide cohomological triviality of a, up to the witness search bound.

    Certified nontrivial when the Chern class is nonzero or the normalized
    invariant leaves the unit circle; trivial with witness m when the
    invariant matches e^{2*pi*i*m*theta} within tolerance, scanning
    m = 0, 1, -1, 2, -2, ... so the minimal |m| wins.
    """
    if bound < 1:
        raise PreconditionError("need bound >= 1")
    if tol is None:
        tol = default_tolerance()
    if chern_symbolic(a).s != 0:
        return TrivialityVerdict.nontrivial(REASON_NONZERO_CHERN)
    w = pic0_invariant(a)
    if abs(abs(w) - 1.0) > tol.abs_eps:
        return TrivialityVerdict.nontrivial(REASON_MODULUS)
    theta = a.lattice.theta
    for m in range(0, bound + 1):
        for candidate in ((m,) if m == 0 else (m, -m)):
            if abs(w - cmath.exp(_TWO_PI_I * candidate * theta)) <= tol.abs_eps:
                return TrivialityVerdict.trivial(candidate)
    return TrivialityVerdict.unknown(bound)


@dataclass(frozen=True)
class AHData:
    """Normal form (chi, E): semicharacter values on the basis plus the Chern form."""

    chi_omega1: complex
    chi_omega2: complex
    chi_omega12: complex
    e_form: AltForm
    lattice: Pseudolattice

    def chi(self, l: LatticeVector) -> complex:
        """Semicharacter value chi(omega1)^a * chi(omega2)^b * e^{pi*i*s*a*b}."""
        sign = -1.0 if (self.e_form.s * l.a * l.b) % 2 else 1.0
        return self.chi_omega1**l.a * self.chi_omega2**l.b * sign


def ah_normal_form(a: Cocycle) -> AHData:
    """Classifying pair of the cocycle's isomorphism class.

    E is the Chern form; the c packed into the chi values is the Pic^0
    invariant of a tensor the inverse of its quadratic-exponent section.
    """
    e = chern_symbolic(a)
    flat = a.tensor(sigma_section(e, a.lattice).inverse())
    c = pic0_invariant(flat)
    parity = -1.0 if e.s % 2 else 1.0
    return AHData(
        chi_omega1=1.0 + 0j,
        chi_omega2=c,
        chi_omega12=c * parity,
        e_form=e,
        lattice=a.lattice,
    )


def ah_group_law(x: AHData, y: AHData) -> AHData:
    """(chi1, E1) * (chi2, E2) = (chi1*chi2, E1+E2), componentwise on the basis."""
    if x.lattice != y.lattice:
        raise DomainError("group law requires matching pseudolattices")
    return AHData(
        chi_omega1=x.chi_omega1 * y.chi_omega1,
        chi_omega2=x.chi_omega2 * y.chi_omega2,
        chi_omega12=x.chi_omega12 * y.chi_omega12,
        e_form=x.e_form + y.e_form,
        lattice=x.lattice,
    )
