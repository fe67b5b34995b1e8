"""Magnetoelectric interaction Lagrangian density of a moving medium.

Three views of the same physics:

* me_density_exact: the full composition (1/mu'(beta)) B' . chi^T E'
  with exactly transformed constants and fields. This is the reference
  model whose Taylor expansion in beta the truncated forms must match;
  the expansion order is enforced numerically by verify_expansion.
* me_density_first_order: the expansion truncated at first order in
  beta, split into named pieces (zeroth, field mixing, mu correction).
* vector_form_density: the first-order pieces rewritten with cross
  products pulled against the boost direction; equal to
  mixing + mu_correction through the cyclic triple-product identity.

Densities here carry no 1/4pi measure; that constant enters once, in
the momentum module.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .algebra import BoostSpec, FieldState, Material, ZHAT, cross, dot, mat_apply
from .errors import DegenerateGrid
from .relativity import transform_constants, transform_fields

# central difference step for the derivative check; balances truncation
# against round-off for double precision
_FD_STEP = 1e-6


@dataclass(frozen=True, slots=True)
class LagrangianBreakdown:
    """Named pieces of the first-order interaction density.

    total_first_order is always the literal sum of the three pieces,
    assembled once at construction and never re-derived.
    """

    zeroth: float
    mixing: float
    mu_correction: float
    total_first_order: float


@dataclass(frozen=True, slots=True)
class ExpansionReport:
    beta_grid: tuple[float, ...]
    residuals: tuple[float, ...]
    slope: float | None
    derivative_delta: float
    derivative_rel: float
    identically_zero: bool


def me_density_exact(m: Material, f: FieldState, b: BoostSpec) -> float:
    """(1/mu'(beta)) B' . chi^T E' with exact transforms throughout."""
    tc = transform_constants(m, b)
    fp = transform_fields(f, b, "exact")
    return (1.0 / tc.mu_prime) * dot(fp.B, mat_apply(m.chi.transpose(), fp.E))


def me_density_first_order(m: Material, f: FieldState, b: BoostSpec) -> LagrangianBreakdown:
    """First-order truncation in beta, split into its named pieces.

    zeroth        (1/mu) B . chi^T E
    mixing        (beta/mu) [B . chi^T (z x B) + (E x z) . chi^T E]
    mu_correction (beta/mu) (n - 1/n) B . chi^T E
    """
    chi_t = m.chi.transpose()
    bce = dot(f.B, mat_apply(chi_t, f.E))
    zeroth = (1.0 / m.mu) * bce
    mixing = (b.beta / m.mu) * (
        dot(f.B, mat_apply(chi_t, cross(ZHAT, f.B)))
        + dot(cross(f.E, ZHAT), mat_apply(chi_t, f.E))
    )
    n = m.index
    mu_correction = (b.beta / m.mu) * (n - 1.0 / n) * bce
    return LagrangianBreakdown(
        zeroth=zeroth,
        mixing=mixing,
        mu_correction=mu_correction,
        total_first_order=zeroth + mixing + mu_correction,
    )


def vector_form_density(m: Material, f: FieldState, b: BoostSpec) -> float:
    """First-order interaction pieces in boost-projected vector form.

    (beta/mu) z . [B x (chi B) - E x (chi^T E)]
      + (beta/mu) (n - 1/n) B . chi^T E

    Excludes the beta-independent zeroth piece. Equals
    mixing + mu_correction of me_density_first_order up to round-off.
    """
    chi_t = m.chi.transpose()
    swirl = dot(
        ZHAT,
        cross(f.B, mat_apply(m.chi, f.B)) - cross(f.E, mat_apply(chi_t, f.E)),
    )
    n = m.index
    bce = dot(f.B, mat_apply(chi_t, f.E))
    return (b.beta / m.mu) * swirl + (b.beta / m.mu) * (n - 1.0 / n) * bce


def isolate_mu_term(m: Material, f: FieldState, b: BoostSpec) -> float:
    """[1/mu'(beta) - 1/mu] B . chi^T E with untransformed fields.

    Isolates the contribution of the permeability transform alone; it
    reproduces mu_correction up to O(beta^2).
    """
    tc = transform_constants(m, b)
    bce = dot(f.B, mat_apply(m.chi.transpose(), f.E))
    return (1.0 / tc.mu_prime - 1.0 / m.mu) * bce


def verify_expansion(m: Material, f: FieldState, beta_grid) -> ExpansionReport:
    """Check that the truncation error of the first-order form is O(beta^2).

    For each beta in the grid computes r = |exact - total_first_order|,
    fits the log-log slope of r against beta (expected near 2), and
    compares the central-difference derivative of the exact density at
    beta = 0 with the analytic first-order rate (mixing + mu_correction)
    divided by beta. Residuals that vanish identically (chi = 0 or
    degenerate fields) are flagged instead of fitted.
    """
    grid = tuple(float(x) for x in beta_grid)
    if len(grid) < 3:
        raise DegenerateGrid(f"need at least 3 grid points, got {len(grid)}")
    for x in grid:
        if not (0.0 < x <= 0.1):
            raise DegenerateGrid(f"grid values must lie in (0, 0.1], got {x!r}")
    if any(b2 <= b1 for b1, b2 in zip(grid, grid[1:])):
        raise DegenerateGrid("grid must be strictly increasing")

    residuals = []
    for beta in grid:
        spec = BoostSpec(beta)
        exact = me_density_exact(m, f, spec)
        trunc = me_density_first_order(m, f, spec).total_first_order
        residuals.append(abs(exact - trunc))

    points = [(math.log(b), math.log(r)) for b, r in zip(grid, residuals) if r > 0.0]
    identically_zero = len(points) == 0
    if len(points) >= 2:
        slope, _ = statistics.linear_regression(
            [p[0] for p in points], [p[1] for p in points]
        )
    else:
        slope = None

    h = _FD_STEP
    fd = (
        me_density_exact(m, f, BoostSpec(h)) - me_density_exact(m, f, BoostSpec(-h))
    ) / (2.0 * h)
    bk = me_density_first_order(m, f, BoostSpec(grid[0]))
    rate = (bk.mixing + bk.mu_correction) / grid[0]
    delta = abs(fd - rate)
    scale = max(abs(fd), abs(rate))
    rel = delta / scale if scale > 0.0 else 0.0

    return ExpansionReport(
        beta_grid=grid,
        residuals=tuple(residuals),
        slope=slope,
        derivative_delta=delta,
        derivative_rel=rel,
        identically_zero=identically_zero,
    )
