"""
Nyquist (raised-cosine spectrum) pulse in time and frequency.

The time response is

    r(t) = A sinc(2 pi t / tau) cos(2 rho pi t / tau) / (1 - (4 rho t / tau)^2)

with ``sinc(x) = sin(x) / x``. Zero crossings fall at ``t = k tau / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

__all__ = [
    "PulseParams",
    "TailScanError",
    "eval_time",
    "eval_freq",
    "t_one_percent",
    "band_edges",
]

# relative window (in units of tau) inside which removable singularities are
# replaced by their analytic limit
_SINGULAR_WINDOW = 1e-6
_LEVEL = 0.01
# envelope level that certifies no further 1% crossing
_HORIZON_LEVEL = 0.005
_SCAN_STEP = 1e-3
_BISECT_TOL = 1e-6


class TailScanError(RuntimeError):
    """The tail of the pulse could not be certified below the 1% level."""


@dataclass(frozen=True)
class PulseParams:
    """One element's Nyquist pulse.

    Parameters
    ----------
    amplitude : float
        Peak value ``A`` at ``t = 0`` (linear volts).
    tau : float
        Time scale ``tau``; zero crossings sit at multiples of ``tau / 2``.
    rho : float
        Roll-off factor in ``[0, 1]``.
    """

    amplitude: float
    tau: float
    rho: float

    def __post_init__(self):
        if not self.amplitude > 0:
            raise ValueError(f"amplitude must be > 0, got {self.amplitude}")
        if not self.tau > 0:
            raise ValueError(f"tau must be > 0, got {self.tau}")
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must lie in [0, 1], got {self.rho}")


def _sinc(x):
    # unnormalized sinc; numpy's sinc is sin(pi x)/(pi x)
    return np.sinc(np.asarray(x) / np.pi)


def _shape(x, rho):
    """Unit-amplitude pulse as a function of normalized time x = t / tau."""
    x = np.asarray(x, dtype=float)
    shape = x.shape
    x = np.abs(x).reshape(-1)
    out = np.empty_like(x)
    y = 4.0 * rho * x
    near = np.abs(y - 1.0) < 4.0 * rho * _SINGULAR_WINDOW if rho > 0 else np.zeros_like(x, bool)
    far = ~near
    with np.errstate(divide="ignore", invalid="ignore"):
        out[far] = (
            _sinc(2.0 * np.pi * x[far])
            * np.cos(2.0 * rho * np.pi * x[far])
            / (1.0 - y[far] ** 2)
        )
    if rho > 0:
        out[near] = 0.25 * np.pi * _sinc(np.pi / (2.0 * rho))
    return out.reshape(shape)


def eval_time(p: PulseParams, t):
    """Pulse value ``r(t)``; scalar in, scalar out, arrays broadcast.

    Removable singularities at ``t = 0`` and ``|t| = tau / (4 rho)`` are
    resolved by their limits (``A`` and ``A (pi/4) sinc(pi / (2 rho))``).
    """
    val = p.amplitude * _shape(np.asarray(t, dtype=float) / p.tau, p.rho)
    return float(val) if np.ndim(val) == 0 else val


def band_edges(p: PulseParams) -> tuple[float, float]:
    """Angular frequencies ``(omega_1, omega_2)`` bounding the roll-off zone."""
    return (2.0 * np.pi * (1.0 - p.rho) / p.tau, 2.0 * np.pi * (1.0 + p.rho) / p.tau)


def eval_freq(p: PulseParams, omega):
    """Spectrum ``R(omega)``: flat at ``A tau / 2``, cosine taper, then zero."""
    w = np.abs(np.asarray(omega, dtype=float))
    w1, w2 = band_edges(p)
    flat = 0.5 * p.amplitude * p.tau
    out = np.zeros_like(w)
    out[w < w1] = flat
    taper = (w >= w1) & (w <= w2)
    if w2 > w1:
        out[taper] = 0.5 * flat * (1.0 + np.cos(np.pi * (w[taper] - w1) / (w2 - w1)))
    else:
        # rho = 0: brick wall, half value at the edge
        out[taper] = 0.5 * flat
    return float(out) if np.ndim(out) == 0 else out


def _scan_horizon(rho: float) -> float:
    """Normalized time beyond which |r| / A is certified below the horizon level.

    Uses |r(x)| / A <= min(1, 1 / |1 - (4 rho x)^2|) / (2 pi x), and the second
    factor is decreasing past ``x = 1 / (4 rho)``.
    """
    sinc_only = 1.0 / (2.0 * np.pi * _HORIZON_LEVEL)
    if rho == 0:
        return sinc_only

    def env(x):
        return 1.0 / (2.0 * np.pi * x * ((4.0 * rho * x) ** 2 - 1.0))

    x0 = np.sqrt(2.0) / (4.0 * rho)
    if env(x0) <= _HORIZON_LEVEL:
        return x0
    hi = x0
    while env(hi) > _HORIZON_LEVEL:
        hi *= 2.0
    x_env = brentq(lambda x: env(x) - _HORIZON_LEVEL, x0, hi)
    return min(sinc_only, x_env)


def t_one_percent(p: PulseParams) -> float:
    """Last time at which ``|r(t)|`` reaches 1% of its peak.

    The normalized tail is scanned on a ``tau / 1000`` grid up to a certified
    horizon and the last crossing is refined by bracketed root finding to
    ``1e-6 tau``. For ``rho = 0`` the sinc envelope ``1 / (2 pi t / tau)``
    defines the crossing, i.e. ``t = tau / (2 pi 0.01)``.

    Raises
    ------
    TailScanError
        If the scan finds the pulse above 1% at the horizon.
    """
    return p.tau * _x_one_percent(float(p.rho))


@lru_cache(maxsize=4096)
def _x_one_percent(rho: float) -> float:
    if rho == 0:
        return 1.0 / (2.0 * np.pi * _LEVEL)
    horizon = _scan_horizon(rho)
    x = np.arange(0.0, horizon + _SCAN_STEP, _SCAN_STEP)
    mag = np.abs(_shape(x, rho))
    above = np.flatnonzero(mag >= _LEVEL)
    i = above[-1]
    if i == len(x) - 1:
        raise TailScanError(
            f"|r| still >= 1% at scan horizon x={x[-1]:.4g} tau (rho={rho})"
        )
    return brentq(
        lambda s: abs(float(_shape(s, rho))) - _LEVEL,
        x[i],
        x[i + 1],
        xtol=_BISECT_TOL,
    )
