"""Boost transforms of optical constants and of field pairs.

The medium moves along +z at v = c beta relative to the observer frame.
For the transverse (x-y plane) components the scalar constants transform
as

    mu'  = sqrt(mu/eps) (n + beta) / (1 + n beta)
    eps' = sqrt(eps/mu) (n + beta) / (1 + n beta),   n = sqrt(eps mu),

which leaves the impedance eps'/mu' = eps/mu invariant and sends the
index to the relativistic velocity sum (n + beta)/(1 + n beta). The
susceptibility chi is deliberately not transformed; only the constants
and the fields are.

Longitudinal (z) components of eps and mu are outside this model; all
downstream users assume transverse field configurations and the CLI
warns when inputs violate that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import BoostSpec, FieldState, Material, Vec3, cross
from .errors import DegenerateBoost


@dataclass(frozen=True, slots=True)
class TransformedConstants:
    epsilon_prime: float
    mu_prime: float
    beta: float


def transform_constants(m: Material, b: BoostSpec) -> TransformedConstants:
    """Optical constants of the moving medium seen from the rest frame.

    Raises DegenerateBoost when 1 + n beta <= 0 (the denominator of the
    velocity-addition factor loses its sign, an unphysical drag regime
    for the given index). beta = 0 short-circuits and returns the input
    constants bit-identically.
    """
    if b.beta == 0.0:
        return TransformedConstants(m.epsilon, m.mu, 0.0)
    n = m.index
    denom = 1.0 + n * b.beta
    if denom <= 0.0:
        raise DegenerateBoost(
            f"1 + n*beta = {denom!r} <= 0 for n={n!r}, beta={b.beta!r}"
        )
    factor = (n + b.beta) / denom
    mu_prime = math.sqrt(m.mu / m.epsilon) * factor
    epsilon_prime = math.sqrt(m.epsilon / m.mu) * factor
    return TransformedConstants(epsilon_prime, mu_prime, b.beta)


def index_of(tc: TransformedConstants) -> float:
    """Refractive index of the transformed constants.

    Equals (n + beta)/(1 + n beta) of the source medium, including its
    sign: a boost with beta < -n drives both constants negative, and a
    double-negative medium carries a negative index (the usual
    left-handed convention), so the root is taken with the sign of
    eps'.
    """
    return math.copysign(
        math.sqrt(tc.epsilon_prime * tc.mu_prime), tc.epsilon_prime
    )


def transform_fields(f: FieldState, b: BoostSpec, order: str = "exact") -> FieldState:
    """Field pair in the frame where the medium moves at +beta z.

    order="exact": longitudinal components unchanged, transverse ones
    get the usual gamma (E_t + beta x B) / gamma (B_t - beta x E) form.
    order="first_order": E' = E + beta x B, B' = B - beta x E, gamma = 1.
    """
    if order not in ("exact", "first_order"):
        raise ValueError(f"order must be 'exact' or 'first_order', got {order!r}")
    bvec = Vec3(0.0, 0.0, b.beta)
    if order == "first_order":
        return FieldState(f.E + cross(bvec, f.B), f.B - cross(bvec, f.E))
    gamma = 1.0 / math.sqrt(1.0 - b.beta * b.beta)
    e_par = Vec3(0.0, 0.0, f.E.z)
    b_par = Vec3(0.0, 0.0, f.B.z)
    e_perp = Vec3(f.E.x, f.E.y, 0.0)
    b_perp = Vec3(f.B.x, f.B.y, 0.0)
    e_new = e_par + (e_perp + cross(bvec, f.B)).scale(gamma)
    b_new = b_par + (b_perp - cross(bvec, f.E)).scale(gamma)
    return FieldState(e_new, b_new)
