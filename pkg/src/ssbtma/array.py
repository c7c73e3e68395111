"""
Harmonic array factors, the time-varying array factor, and patterns.

``F_q(theta) = sum_n 2 G_nq exp(j k z_n cos(theta))`` is the spatial pattern
radiated at ``w_c + q w0``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ArrayGeometry
from .modulation import ExcitationMatrix, synth_time

__all__ = [
    "ArrayGeometry",
    "PatternSample",
    "harmonic_factor",
    "time_factor",
    "pattern",
    "pattern_db",
    "total_power",
    "directivity",
]

_DB_FLOOR = -400.0


@dataclass(frozen=True)
class PatternSample:
    theta: float
    q: int
    value: complex
    power_db: float


def _scalar_or_array(x, theta):
    return complex(x[0]) if np.ndim(theta) == 0 else x


def harmonic_factor(ex: ExcitationMatrix, geo: ArrayGeometry, q: int, theta):
    """Spatial array factor of harmonic ``q`` at ``theta`` (degrees)."""
    if ex.N != geo.N:
        raise ValueError(f"excitations have {ex.N} elements, geometry has {geo.N}")
    F = 2.0 * ex.column(q) @ geo.steering_vector(theta)
    return _scalar_or_array(F, theta)


def time_factor(ex: ExcitationMatrix, geo: ArrayGeometry, theta, t, method: str = "harmonic"):
    """Time-varying array factor ``F(theta, t)``.

    ``method="harmonic"`` sums ``F_q(theta) exp(j q w0 t)``;
    ``method="signals"`` weights ``g_n(t) + j hilbert(g_n)(t)`` by the
    element phase terms. Output shape is ``(len(theta), len(t))`` for array
    inputs, a complex scalar for scalars.
    """
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    sv = geo.steering_vector(th)
    if method == "harmonic":
        Fq = 2.0 * ex.G.T @ sv  # (n_harmonics, n_theta)
        w0 = 2.0 * np.pi / ex.T0
        ph = np.exp(1j * w0 * np.outer(ex.harmonics, tt))
        out = Fq.T @ ph
    elif method == "signals":
        g, gh = synth_time(ex, tt)  # (N, n_t)
        out = sv.T @ (g + 1j * gh)
    else:
        raise ValueError(f"unknown method {method!r}")
    if np.ndim(theta) == 0 and np.ndim(t) == 0:
        return complex(out[0, 0])
    return out


def pattern_db(ex: ExcitationMatrix, geo: ArrayGeometry, qs, theta_grid) -> np.ndarray:
    """Jointly normalized power pattern in dB, shape ``(len(qs), len(theta_grid))``."""
    amp = np.abs(np.array([harmonic_factor(ex, geo, q, np.asarray(theta_grid, float)) for q in qs]))
    peak = amp.max()
    if peak == 0:
        return np.full(amp.shape, _DB_FLOOR)
    with np.errstate(divide="ignore"):
        db = 20.0 * np.log10(amp / peak)
    return np.maximum(db, _DB_FLOOR)


def pattern(ex: ExcitationMatrix, geo: ArrayGeometry, qs, theta_grid) -> list[PatternSample]:
    """Pattern samples for every ``(theta, q)``, normalized across all ``qs``."""
    theta_grid = np.asarray(theta_grid, dtype=float)
    if theta_grid.size and (theta_grid.min() < 0 or theta_grid.max() > 180):
        raise ValueError("theta grid must lie within [0, 180] degrees")
    qs = list(qs)
    vals = [harmonic_factor(ex, geo, q, theta_grid) for q in qs]
    db = pattern_db(ex, geo, qs, theta_grid)
    return [
        PatternSample(float(th), q, complex(vals[j][i]), float(db[j, i]))
        for i, th in enumerate(theta_grid)
        for j, q in enumerate(qs)
    ]


def total_power(ex: ExcitationMatrix) -> float:
    """Total mean radiated power ``sum_q 4 pi sum_n |2 G_nq|^2`` over all columns."""
    return float(4.0 * np.pi * np.sum(np.abs(2.0 * ex.G) ** 2))


def directivity(ex: ExcitationMatrix, geo: ArrayGeometry, q: int, theta_q: float) -> float:
    """Directivity of harmonic beam ``q`` toward ``theta_q``, in dBi.

    Referenced to the total power over every radiated harmonic.
    """
    peak = abs(harmonic_factor(ex, geo, q, theta_q)) ** 2
    return float(10.0 * np.log10(4.0 * np.pi * peak / total_power(ex)))
