"""Momentum balance of the moving medium, term by term.

The stationary-velocity equation assembled here reads, per unit volume,

    rho0 v zhat = (1/4 pi mu c) [ (eps mu - 1) E x B
                                  + E x (chi^T E) - B x (chi B) ]
                  - (1/4 pi mu c) (n - 1/n) (B . chi^T E) zhat

with n = sqrt(eps mu). The first bracket collects the classical
Abraham-Minkowski piece and the two magnetoelectric cross terms; the
trailing scalar is the correction inherited from the boost transform of
mu (mu_term_z below). The right side is generically not parallel to
zhat; we expose the full vector plus the magnitude of its transverse
part instead of silently projecting.

Fields are lab-frame values at v -> 0, consistent with the first-order
derivation of the underlying Lagrangian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BoostSpec, FieldState, Material, Vec3, cross, dot, mat_apply
from .constants import C_LIGHT, FOUR_PI
from .errors import DegenerateProbe, DivisionDegenerate
from .lagrangian import vector_form_density

_RATIO_FLOOR = 1e-300


@dataclass(frozen=True, slots=True)
class VelocityResult:
    """Full right-hand side of the velocity equation and its breakdown.

    The three vector terms and mu_term_z are momentum densities
    (g cm^-2 s^-1); rhs_vector and v_z are those divided by rho0, i.e.
    velocities in cm/s. transverse_residual is the Euclidean norm of the
    (x, y) part of rhs_vector.
    """

    rhs_vector: Vec3
    v_z: float
    abraham_minkowski_term: Vec3
    chi_E_term: Vec3
    chi_B_term: Vec3
    mu_term_z: float
    transverse_residual: float


def velocity_from_bilinears(
    m: Material,
    e_cross_b: Vec3,
    e_cross_chiT_e: Vec3,
    b_cross_chi_b: Vec3,
    b_dot_chiT_e: float,
) -> VelocityResult:
    """Assemble the velocity equation from precomputed field bilinears.

    Classical single-field evaluation and vacuum-expectation evaluation
    share this path; the bilinears are substituted term for term.
    """
    pref = 1.0 / (FOUR_PI * m.mu * C_LIGHT)
    n = m.index
    am = e_cross_b.scale(pref * (m.epsilon * m.mu - 1.0))
    chi_e = e_cross_chiT_e.scale(pref)
    chi_b = b_cross_chi_b.scale(-pref)
    mu_term_z = -pref * (n - 1.0 / n) * b_dot_chiT_e
    total = am + chi_e + chi_b + Vec3(0.0, 0.0, mu_term_z)
    rhs = total.scale(1.0 / m.rho0)
    return VelocityResult(
        rhs_vector=rhs,
        v_z=rhs.z,
        abraham_minkowski_term=am,
        chi_E_term=chi_e,
        chi_B_term=chi_b,
        mu_term_z=mu_term_z,
        transverse_residual=(rhs.x * rhs.x + rhs.y * rhs.y) ** 0.5,
    )


def medium_velocity(m: Material, f: FieldState) -> VelocityResult:
    """Velocity equation for a single classical field configuration."""
    chi_t = m.chi.transpose()
    return velocity_from_bilinears(
        m,
        e_cross_b=cross(f.E, f.B),
        e_cross_chiT_e=cross(f.E, mat_apply(chi_t, f.E)),
        b_cross_chi_b=cross(f.B, mat_apply(m.chi, f.B)),
        b_dot_chiT_e=dot(f.B, mat_apply(chi_t, f.E)),
    )


def term_ratio(m: Material, f: FieldState) -> float:
    """|mu_term_z| relative to the z-projection of the other three terms.

    Quantifies the size of the permeability-transform correction against
    the previously known contributions. Raises DivisionDegenerate when
    those contributions have no z-component to compare against.
    """
    vr = medium_velocity(m, f)
    denom = (
        vr.abraham_minkowski_term.z + vr.chi_E_term.z + vr.chi_B_term.z
    )
    if abs(denom) < _RATIO_FLOOR:
        raise DivisionDegenerate(
            "z-projection of the non-correction terms vanishes"
        )
    return abs(vr.mu_term_z) / abs(denom)


def lagrangian_consistency_check(m: Material, f: FieldState, beta_probe: float) -> float:
    """Finite-difference cross-check between the Lagrangian and the velocity equation.

    Differentiates the velocity-dependent interaction density (with its
    1/4pi measure restored) with respect to v at v = 0 by a central
    difference of half-width c*beta_probe, and compares against the
    chi-dependent part of rho0 * rhs. In this sign convention the
    equation of motion carries the interaction derivative with a flipped
    sign, so the check returns |derivative + chi_part|, which is pure
    round-off when both sides are consistent. The (eps mu - 1) E x B
    term originates elsewhere and is excluded.
    """
    if not (0.0 < beta_probe <= 1e-3):
        raise DegenerateProbe(
            f"beta_probe must lie in (0, 1e-3], got {beta_probe!r}"
        )
    plus = vector_form_density(m, f, BoostSpec(beta_probe))
    minus = vector_form_density(m, f, BoostSpec(-beta_probe))
    derivative = (plus - minus) / (2.0 * C_LIGHT * beta_probe) / FOUR_PI
    vr = medium_velocity(m, f)
    chi_part = vr.chi_E_term.z + vr.chi_B_term.z + vr.mu_term_z
    return abs(derivative + chi_part)
