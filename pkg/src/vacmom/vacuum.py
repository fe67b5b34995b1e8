"""Zero-point plane-wave mode ensembles and vacuum expectation sums.

Wavevectors live on a cell-centered Cartesian grid: grid_n cells per
axis tile [-cutoff, cutoff], each cell contributing its center, and the
result is filtered to the sharp sphere |k| <= cutoff with k = 0 excluded.
Cell centers come in exact +/-k floating point pairs, which the
cancellation diagnostics rely on.

Each retained k carries two transverse polarizations built from a fixed
reference axis (z, or x when k is nearly parallel to z), an in-medium
frequency omega = c |k| / n, and the zero-point amplitude

    amplitude = sqrt(2 pi hbar omega / V).

Cycle averaging of the real fields is absorbed into that amplitude, so
every bilinear below shares one convention: per mode, E = amplitude e
and B = n amplitude (khat x e).

Sums are accumulated with Neumaier compensation in one fixed mode order.
Results are therefore bit-stable; any parallel split a caller might
introduce must reduce in this order to preserve that.

Alongside the four signed sums we track per-wavevector magnitude
channels (sum over k of |per-k polarization-summed bilinear|). The
signed sums of odd-in-k quantities cancel over the symmetric grid by
construction; the magnitude channels are what grows with the cutoff and
what the scaling diagnostics fit. Per-wavevector (not per-mode) grouping
keeps these channels independent of the polarization basis choice.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from .algebra import Material, Vec3, XHAT, ZHAT, cross, dot, mat_apply
from .constants import C_LIGHT, HBAR
from .errors import EmptyModeSet


@dataclass(frozen=True, slots=True)
class Mode:
    k_vector: Vec3
    polarization: Vec3
    amplitude: float


@dataclass(frozen=True, slots=True)
class ModeSet:
    modes: tuple[Mode, ...]
    cutoff: float
    volume: float
    grid_n: int


@dataclass(frozen=True, slots=True)
class BilinearSums:
    """Vacuum-summed field bilinears over a mode set.

    e_cross_b, e_cross_chiT_e, b_cross_chi_b, b_dot_chiT_e are the
    signed sums entering the velocity equation. The abs_* fields are the
    per-wavevector magnitude channels described in the module docstring.
    zero_point_energy is sum hbar omega / 2 over modes, in erg.
    """

    e_cross_b: Vec3
    e_cross_chiT_e: Vec3
    b_cross_chi_b: Vec3
    b_dot_chiT_e: float
    abs_e_cross_b: float
    abs_e_cross_chiT_e: float
    abs_b_cross_chi_b: float
    abs_b_dot_chiT_e: float
    mode_count: int
    zero_point_energy: float


class _NeumaierSum:
    """Kahan-Neumaier compensated accumulator."""

    __slots__ = ("_sum", "_comp")

    def __init__(self):
        self._sum = 0.0
        self._comp = 0.0

    def add(self, value: float) -> None:
        t = self._sum + value
        if abs(self._sum) >= abs(value):
            self._comp += (self._sum - t) + value
        else:
            self._comp += (value - t) + self._sum
        self._sum = t

    def value(self) -> float:
        return self._sum + self._comp


def _polarization_pair(khat: Vec3) -> tuple[Vec3, Vec3]:
    ref = ZHAT if abs(khat.z) <= 0.9 else XHAT
    e1 = cross(ref, khat)
    e1 = e1.scale(1.0 / e1.norm())
    e2 = cross(khat, e1)
    return e1, e2


def build_mode_set(m: Material, grid_n: int, cutoff: float, volume: float) -> ModeSet:
    """Discretize the zero-point field below the cutoff.

    grid_n >= 2 cells per axis; cutoff in rad/cm; volume in cm^3.
    Raises EmptyModeSet if the spherical filter removes everything.
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be >= 2, got {grid_n!r}")
    if not cutoff > 0.0:
        raise ValueError(f"cutoff must be > 0, got {cutoff!r}")
    if not volume > 0.0:
        raise ValueError(f"volume must be > 0, got {volume!r}")

    step = 2.0 * cutoff / grid_n
    # cell centers; the +/- symmetry is exact because i + 0.5 - grid_n/2
    # is an exact multiple of 0.5 and IEEE negation commutes with the
    # final multiply
    coords = [(i + 0.5 - grid_n / 2.0) * step for i in range(grid_n)]
    n = m.index
    modes: list[Mode] = []
    for kx in coords:
        for ky in coords:
            for kz in coords:
                if kx == 0.0 and ky == 0.0 and kz == 0.0:
                    continue
                knorm = math.sqrt(kx * kx + ky * ky + kz * kz)
                if knorm > cutoff:
                    continue
                k = Vec3(kx, ky, kz)
                khat = k.scale(1.0 / knorm)
                omega = C_LIGHT * knorm / n
                amplitude = math.sqrt(2.0 * math.pi * HBAR * omega / volume)
                e1, e2 = _polarization_pair(khat)
                modes.append(Mode(k, e1, amplitude))
                modes.append(Mode(k, e2, amplitude))
    if not modes:
        raise EmptyModeSet(
            f"no modes survive cutoff={cutoff!r} with grid_n={grid_n!r}"
        )
    return ModeSet(tuple(modes), cutoff, volume, grid_n)


def vacuum_bilinears(ms: ModeSet, m: Material) -> BilinearSums:
    """Sum the velocity-equation bilinears over all zero-point modes."""
    if not ms.modes:
        raise EmptyModeSet("mode set is empty")
    n = m.index
    chi = m.chi
    chi_t = chi.transpose()

    acc_exb = (_NeumaierSum(), _NeumaierSum(), _NeumaierSum())
    acc_exce = (_NeumaierSum(), _NeumaierSum(), _NeumaierSum())
    acc_bxcb = (_NeumaierSum(), _NeumaierSum(), _NeumaierSum())
    acc_bce = _NeumaierSum()
    abs_exb = _NeumaierSum()
    abs_exce = _NeumaierSum()
    abs_bxcb = _NeumaierSum()
    abs_bce = _NeumaierSum()
    zpe = _NeumaierSum()

    def _flush(exb: Vec3, exce: Vec3, bxcb: Vec3, bce: float) -> None:
        for a, v in zip(acc_exb, exb.as_tuple()):
            a.add(v)
        for a, v in zip(acc_exce, exce.as_tuple()):
            a.add(v)
        for a, v in zip(acc_bxcb, bxcb.as_tuple()):
            a.add(v)
        acc_bce.add(bce)
        abs_exb.add(exb.norm())
        abs_exce.add(exce.norm())
        abs_bxcb.add(bxcb.norm())
        abs_bce.add(abs(bce))

    # group consecutive modes sharing a wavevector so the magnitude
    # channels see the polarization-summed (basis independent) per-k value
    i = 0
    total = len(ms.modes)
    while i < total:
        k = ms.modes[i].k_vector
        knorm = k.norm()
        khat = k.scale(1.0 / knorm)
        exb = Vec3(0.0, 0.0, 0.0)
        exce = Vec3(0.0, 0.0, 0.0)
        bxcb = Vec3(0.0, 0.0, 0.0)
        bce = 0.0
        while i < total and ms.modes[i].k_vector == k:
            mode = ms.modes[i]
            e_field = mode.polarization.scale(mode.amplitude)
            b_field = cross(khat, mode.polarization).scale(n * mode.amplitude)
            exb = exb + cross(e_field, b_field)
            exce = exce + cross(e_field, mat_apply(chi_t, e_field))
            bxcb = bxcb + cross(b_field, mat_apply(chi, b_field))
            bce = bce + dot(b_field, mat_apply(chi_t, e_field))
            zpe.add(0.5 * HBAR * C_LIGHT * knorm / n)
            i += 1
        _flush(exb, exce, bxcb, bce)

    return BilinearSums(
        e_cross_b=Vec3(*(a.value() for a in acc_exb)),
        e_cross_chiT_e=Vec3(*(a.value() for a in acc_exce)),
        b_cross_chi_b=Vec3(*(a.value() for a in acc_bxcb)),
        b_dot_chiT_e=acc_bce.value(),
        abs_e_cross_b=abs_exb.value(),
        abs_e_cross_chiT_e=abs_exce.value(),
        abs_b_cross_chi_b=abs_bxcb.value(),
        abs_b_dot_chiT_e=abs_bce.value(),
        mode_count=len(ms.modes),
        zero_point_energy=zpe.value(),
    )


def cutoff_sweep(m: Material, grid_n: int, cutoffs, volume: float):
    """Bilinear sums across a range of cutoffs at fixed k-space resolution.

    The grid is scaled proportionally with the cutoff (constant cell
    size in k space), so the sweep probes the ultraviolet growth rather
    than discretization changes. Returns a list of (cutoff, BilinearSums).
    """
    cuts = [float(c) for c in cutoffs]
    if not cuts:
        raise ValueError("cutoffs must be nonempty")
    if any(c <= 0.0 for c in cuts):
        raise ValueError("cutoffs must be > 0")
    if any(c2 <= c1 for c1, c2 in zip(cuts, cuts[1:])):
        raise ValueError("cutoffs must be sorted ascending")
    base = cuts[0]
    out = []
    for c in cuts:
        scaled_n = max(2, round(grid_n * c / base))
        ms = build_mode_set(m, scaled_n, c, volume)
        out.append((c, vacuum_bilinears(ms, m)))
    return out


_MAGNITUDE_CHANNELS = (
    "abs_e_cross_b",
    "abs_e_cross_chiT_e",
    "abs_b_cross_chi_b",
    "abs_b_dot_chiT_e",
)


def scaling_slopes(sweep) -> dict[str, float]:
    """Log-log growth exponents of each magnitude channel over a sweep.

    Takes the output of cutoff_sweep. Channels that are zero somewhere
    (or with fewer than two usable points) get nan.
    """
    slopes: dict[str, float] = {}
    for name in _MAGNITUDE_CHANNELS:
        pts = [
            (math.log(c), math.log(getattr(s, name)))
            for c, s in sweep
            if getattr(s, name) > 0.0
        ]
        if len(pts) < 2:
            slopes[name] = float("nan")
            continue
        slope, _ = statistics.linear_regression(
            [p[0] for p in pts], [p[1] for p in pts]
        )
        slopes[name] = slope
    return slopes
