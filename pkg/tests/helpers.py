"""Shared random generators for the test suite.

All samplers take an explicit random.Random so every test is seed-pinned.
Cocycle coefficients are kept small (degree <= 3, |coeffs| <= 1) so that the
four-term Chern sums stay numerically well conditioned on the standard
sampling domain.
"""

from __future__ import annotations

import cmath
import random

from qtline import Cocycle, ExponentPoly, LatticeVector, Pseudolattice

# Keep |Re g_1| below 1/(4*omega1) so arg(phi(omega1)) stays in (-pi/2, pi/2)
# and principal-branch logs add exactly when two such cocycles are multiplied.
BRANCH_SAFE_SLOPE = 0.2


def random_vector(rng: random.Random, bound: int = 10) -> LatticeVector:
    return LatticeVector(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_v(rng: random.Random, bound: float = 5.0) -> complex:
    return complex(rng.uniform(-bound, bound), rng.uniform(-bound, bound))


def random_unit_modulus(rng: random.Random) -> complex:
    return cmath.exp(2j * rng.uniform(-3.0, 3.0))


def random_nonzero(rng: random.Random, lo: float = 0.3, hi: float = 3.0) -> complex:
    return rng.uniform(lo, hi) * cmath.exp(1j * rng.uniform(-3.1, 3.1))


def random_poly(rng: random.Random, max_degree: int = 3, scale: float = 0.4) -> ExponentPoly:
    degree = rng.randint(0, max_degree)
    coeffs = tuple(
        complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)) for _ in range(degree + 1)
    )
    return ExponentPoly(coeffs)


def random_cocycle(
    rng: random.Random,
    lattice: Pseudolattice,
    s_bound: int = 5,
    allow_zero_s: bool = True,
    max_degree: int = 3,
    scale: float = 0.4,
) -> Cocycle:
    s = rng.randint(-s_bound, s_bound)
    if not allow_zero_s and s == 0:
        s = rng.choice([-1, 1]) * rng.randint(1, s_bound)
    return Cocycle(s, random_nonzero(rng), random_poly(rng, max_degree, scale), lattice)


def random_chern_trivial(rng: random.Random, lattice: Pseudolattice, branch_safe: bool = True) -> Cocycle:
    """Random s = 0 cocycle; branch_safe pins the linear exponent coefficient
    so principal-branch normalization is multiplicative across pairs."""
    poly = random_poly(rng)
    if branch_safe:
        coeffs = list(poly.coeffs) + [0j] * (2 - len(poly.coeffs))
        coeffs[1] = complex(
            rng.uniform(-BRANCH_SAFE_SLOPE, BRANCH_SAFE_SLOPE),
            rng.uniform(-BRANCH_SAFE_SLOPE, BRANCH_SAFE_SLOPE),
        )
        poly = ExponentPoly(tuple(coeffs))
    return Cocycle(0, random_nonzero(rng), poly, lattice)
