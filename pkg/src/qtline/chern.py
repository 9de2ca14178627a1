"""The Chern class of a cocycle: an integral alternating form on the lattice.

With the basis {omega1, omega2} fixed, every integer-valued alternating form
on L is

    eta(a*omega1 + b*omega2, c*omega1 + d*omega2) = s * (a*d - b*c)

for a single integer s, so :class:`AltForm` stores just s.  Orientation: the
positive generator takes value +1 on (omega1, omega2).

Two independent routes compute the Chern class of a cocycle and must agree:

* ``chern_symbolic`` reads s off the normal form (characters and coboundaries
  cancel in the defining four-term sum, the quadratic-exponent block
  contributes s*(ad - bc));
* ``chern_numeric`` evaluates the four-term sum of exponents

      a(l2, v+l1) + a(l1, v) - a(l2, v) - a(l1, v+l2)

  at an arbitrary v and rounds.  The sum is independent of v, which the
  caller can (and the tests do) probe by evaluating at several v.

The numeric route is deliberately kept as the anti-regression oracle for
every branch-of-logarithm decision elsewhere in the library.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cocycle import Cocycle, ExponentPoly
from .errors import ConsistencyError
from .numeric import Tolerance, default_tolerance
from .pseudolattice import LatticeVector, Pseudolattice

# A rounded four-term sum farther than this from an integer means a malformed
# cocycle or a branch bug, not float noise.
_INTEGER_SLACK = 1e-6


@dataclass(frozen=True)
class AltForm:
    """Integral alternating form s*(ad - bc) on the lattice basis."""

    s: int

    def __add__(self, other: AltForm) -> AltForm:
        return AltForm(self.s + other.s)

    def __neg__(self) -> AltForm:
        return AltForm(-self.s)


def alt_eval(eta: AltForm, l1: LatticeVector, l2: LatticeVector) -> int:
    return eta.s * (l1.a * l2.b - l2.a * l1.b)


def chern_symbolic(a: Cocycle) -> AltForm:
    """Chern class read off the normal form; exact."""
    return AltForm(a.s)


def chern_numeric(
    a: Cocycle,
    l1: LatticeVector,
    l2: LatticeVector,
    v: complex,
    tol: Tolerance | None = None,
) -> int:
    """Chern class via the four-term exponent sum at the sample point v."""
    if tol is None:
        tol = default_tolerance()
    lat = a.lattice
    w1, w2 = lat.omega1_float, lat.omega2_float
    shift1 = l1.a * w1 + l1.b * w2
    shift2 = l2.a * w1 + l2.b * w2
    total = (
        a.exponent(l2, v + shift1)
        + a.exponent(l1, v)
        - a.exponent(l2, v)
        - a.exponent(l1, v + shift2)
    )
    if abs(total.imag) > tol.abs_eps:
        raise ConsistencyError(f"four-term sum has imaginary part {total.imag:.3g}")
    nearest = round(total.real)
    if abs(total.real - nearest) > _INTEGER_SLACK:
        raise ConsistencyError(f"four-term sum {total.real!r} is not near an integer")
    return nearest


def sigma_section(eta: AltForm, lattice: Pseudolattice) -> Cocycle:
    """Right inverse of the Chern class: a cocycle with prescribed class eta.

    Returns the quadratic-exponent cocycle (s=eta.s, c=1, g=0); composing with
    ``chern_symbolic`` gives back eta exactly.
    """
    return Cocycle(eta.s, 1.0, ExponentPoly.zero(), lattice)
