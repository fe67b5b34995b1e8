"""Small fixed-size real linear algebra plus the shared domain types.

All values are immutable after construction and every operation is a
pure function, so everything here is safe to share across threads or
processes without locking.

Units are Gaussian (CGS): E in statvolt/cm, B in gauss, mass density in
g/cm^3. Direction vectors and the susceptibility tensor chi are
dimensionless. The boost axis is fixed to +z by convention; BoostSpec
stores only the dimensionless speed beta = v/c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _require_finite(label: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{label} must be finite, got {v!r}")


@dataclass(frozen=True, slots=True)
class Vec3:
    x: float
    y: float
    z: float

    def __post_init__(self):
        _require_finite("Vec3 component", self.x, self.y, self.z)

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def scale(self, s: float) -> "Vec3":
        return Vec3(s * self.x, s * self.y, s * self.z)

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


ZERO3 = Vec3(0.0, 0.0, 0.0)
XHAT = Vec3(1.0, 0.0, 0.0)
YHAT = Vec3(0.0, 1.0, 0.0)
ZHAT = Vec3(0.0, 0.0, 1.0)


def dot(a: Vec3, b: Vec3) -> float:
    return a.x * b.x + a.y * b.y + a.z * b.z


def cross(a: Vec3, b: Vec3) -> Vec3:
    """Right-handed cross product.

    Component expressions are ordered so that cross(b, a) is the exact
    floating point negation of cross(a, b): IEEE products commute and
    x - y == -(y - x) for every rounding case (modulo signed zeros,
    which compare equal anyway).
    """
    return Vec3(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )


def triple(a: Vec3, b: Vec3, c: Vec3) -> float:
    """Scalar triple product a . (b x c)."""
    return dot(a, cross(b, c))


@dataclass(frozen=True, slots=True)
class Mat3:
    """3x3 real matrix, row-major fields xx..zz (row then column)."""

    xx: float
    xy: float
    xz: float
    yx: float
    yy: float
    yz: float
    zx: float
    zy: float
    zz: float

    def __post_init__(self):
        _require_finite(
            "Mat3 entry",
            self.xx, self.xy, self.xz,
            self.yx, self.yy, self.yz,
            self.zx, self.zy, self.zz,
        )

    @classmethod
    def from_rows(cls, rows) -> "Mat3":
        (a, b, c), (d, e, f), (g, h, i) = rows
        return cls(a, b, c, d, e, f, g, h, i)

    @classmethod
    def identity(cls) -> "Mat3":
        return cls(1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0)

    @classmethod
    def zero(cls) -> "Mat3":
        return cls(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    @classmethod
    def diagonal(cls, a: float, b: float, c: float) -> "Mat3":
        return cls(a, 0.0, 0.0, 0.0, b, 0.0, 0.0, 0.0, c)

    def transpose(self) -> "Mat3":
        return Mat3(
            self.xx, self.yx, self.zx,
            self.xy, self.yy, self.zy,
            self.xz, self.yz, self.zz,
        )

    def rows(self):
        return (
            (self.xx, self.xy, self.xz),
            (self.yx, self.yy, self.yz),
            (self.zx, self.zy, self.zz),
        )

    def symmetric_part(self) -> "Mat3":
        t = self.transpose()
        return Mat3(*(0.5 * (u + v) for u, v in zip(_entries(self), _entries(t))))

    def antisymmetric_part(self) -> "Mat3":
        t = self.transpose()
        return Mat3(*(0.5 * (u - v) for u, v in zip(_entries(self), _entries(t))))


def _entries(m: Mat3):
    return (m.xx, m.xy, m.xz, m.yx, m.yy, m.yz, m.zx, m.zy, m.zz)


def mat_apply(m: Mat3, v: Vec3) -> Vec3:
    """Matrix-vector product M v (column-vector semantics).

    mat_apply(m.transpose(), v) therefore realizes v^T M, which is how
    the chi^T couplings are written out.
    """
    return Vec3(
        m.xx * v.x + m.xy * v.y + m.xz * v.z,
        m.yx * v.x + m.yy * v.y + m.yz * v.z,
        m.zx * v.x + m.zy * v.y + m.zz * v.z,
    )


@dataclass(frozen=True, slots=True)
class Material:
    """Intrinsic medium parameters in its rest frame.

    epsilon, mu: scalar permittivity and permeability (dimensionless,
    Gaussian). chi: magnetoelectric susceptibility tensor, dimensionless,
    no symmetry imposed. rho0: rest mass density in g/cm^3.
    """

    epsilon: float
    mu: float
    chi: Mat3
    rho0: float

    def __post_init__(self):
        _require_finite("Material parameter", self.epsilon, self.mu, self.rho0)
        if self.epsilon <= 0.0:
            raise ValueError(f"epsilon must be > 0, got {self.epsilon!r}")
        if self.mu <= 0.0:
            raise ValueError(f"mu must be > 0, got {self.mu!r}")
        if self.rho0 <= 0.0:
            raise ValueError(f"rho0 must be > 0, got {self.rho0!r}")

    @property
    def index(self) -> float:
        """Refractive index n = sqrt(epsilon mu)."""
        return math.sqrt(self.epsilon * self.mu)


@dataclass(frozen=True, slots=True)
class BoostSpec:
    """Uniform boost along +z at speed beta = v/c, |beta| < 1."""

    beta: float

    def __post_init__(self):
        _require_finite("beta", self.beta)
        if not abs(self.beta) < 1.0:
            raise ValueError(f"|beta| must be < 1, got {self.beta!r}")


@dataclass(frozen=True, slots=True)
class FieldState:
    """Lab-frame field pair: E in statvolt/cm, B in gauss."""

    E: Vec3
    B: Vec3
