"""
Independent numerical checks.

These routines never call the closed forms they verify. Coefficients come
from an FFT of sampled waveforms and pattern powers from Gauss-Legendre
quadrature over the sphere. Sideband content comes from the spectrum of the
sampled array output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import ArrayGeometry
from .modulation import ExcitationMatrix, synth_time
from .pulse import PulseParams, eval_freq, eval_time

__all__ = [
    "DEFAULT_SAMPLES",
    "DBC_FLOOR",
    "AliasingError",
    "SampledPeriod",
    "sample_period",
    "extract_coefficients",
    "periodization_check",
    "quadrature_order",
    "integrate_pattern_power",
    "line_spectrum",
    "ssb_suppression",
]

DEFAULT_SAMPLES = 4096
DBC_FLOOR = -200.0


class AliasingError(ValueError):
    """Too few samples per period for the requested harmonics."""


@dataclass(frozen=True)
class SampledPeriod:
    """Uniform samples ``x(t0 + m T0 / M)``, ``m = 0..M-1``, over one period."""

    samples: np.ndarray
    T0: float = 1.0
    t0: float = 0.0

    @property
    def M(self) -> int:
        return len(self.samples)

    @property
    def sample_rate(self) -> float:
        return self.M / self.T0


def sample_period(fn, T0: float = 1.0, M: int = DEFAULT_SAMPLES, t0: float = 0.0) -> SampledPeriod:
    """Sample a vectorized function of time over ``[t0, t0 + T0)``."""
    if M < 4 or M & (M - 1):
        raise ValueError(f"sample count must be a power of two >= 4, got {M}")
    t = t0 + T0 * np.arange(M) / M
    return SampledPeriod(np.asarray(fn(t)), T0, t0)


def extract_coefficients(sig: SampledPeriod, q_max: int) -> np.ndarray:
    """Exponential Fourier coefficients ``C_q`` for ``q = -q_max..q_max``.

    Exact for trigonometric polynomials of degree below ``M / 2``.
    """
    M = sig.M
    if not M > 2 * q_max:
        raise AliasingError(f"M={M} samples cannot resolve harmonics up to {q_max}")
    spec = np.fft.fft(sig.samples) / M
    q = np.arange(-q_max, q_max + 1)
    C = spec[q % M]
    if sig.t0:
        C = C * np.exp(-2j * np.pi * q * sig.t0 / sig.T0)
    return C


def periodization_check(
    p: PulseParams,
    T0: float,
    replicas: int,
    q_max: int,
    M: int = DEFAULT_SAMPLES,
    harmonics=None,
) -> float:
    """Worst deviation between the replica-summed pulse train and ``R(q w0) / T0``.

    The train ``sum_{|m| <= replicas} r(t - m T0)`` is sampled over
    ``[-T0/2, T0/2)``. Deviations are relative to each expected coefficient,
    or to the peak coefficient where the expected value is zero.
    ``harmonics`` restricts the comparison to those ``|q|`` values.
    """
    if replicas < 0:
        raise ValueError("replicas must be >= 0")
    shifts = T0 * np.arange(-replicas, replicas + 1)

    def train(t):
        return eval_time(p, np.subtract.outer(t, shifts)).sum(axis=-1)

    C = extract_coefficients(sample_period(train, T0, M, t0=-0.5 * T0), q_max)
    q = np.arange(-q_max, q_max + 1)
    expected = eval_freq(p, 2.0 * np.pi * q / T0) / T0
    scale = np.where(expected > 0, expected, np.abs(expected).max())
    dev = np.abs(C - expected) / scale
    if harmonics is not None:
        keep = np.isin(np.abs(q), np.asarray(list(harmonics)))
        dev = dev[keep]
    return float(dev.max())


def quadrature_order(N: int) -> int:
    return 4 * N + 16


def integrate_pattern_power(ex: ExcitationMatrix, geo: ArrayGeometry, q: int, order: int | None = None) -> float:
    """``int |F_q|^2 dOmega`` via Gauss-Legendre in ``cos(theta)``; azimuth is trivial."""
    order = quadrature_order(geo.N) if order is None else order
    u, w = np.polynomial.legendre.leggauss(order)
    a = 2.0 * ex.column(q)
    F = a @ np.exp(2j * np.pi * np.outer(geo.z, u))
    return float(2.0 * np.pi * np.sum(w * np.abs(F) ** 2))


def _array_output(ex, geo, theta, t, hilbert):
    g, gh = synth_time(ex, t)
    if hilbert == "on":
        s = g + 1j * gh
    elif hilbert == "off":
        s = g.astype(complex)
    elif hilbert == "flip":
        s = g - 1j * gh
    else:
        raise ValueError(f"hilbert must be 'on', 'off' or 'flip', got {hilbert!r}")
    sv = geo.steering_vector(theta)[:, 0]
    return sv @ s


def line_spectrum(ex: ExcitationMatrix, geo: ArrayGeometry, theta: float,
                  M: int = DEFAULT_SAMPLES, hilbert: str = "on", q_max: int | None = None) -> np.ndarray:
    """Spectral lines ``q = -q_max..q_max`` of the array output seen at ``theta``."""
    q_max = ex.G.shape[1] if q_max is None else q_max
    sig = sample_period(lambda t: _array_output(ex, geo, theta, t, hilbert), ex.T0, M)
    return extract_coefficients(sig, q_max)


def ssb_suppression(ex: ExcitationMatrix, geo: ArrayGeometry, theta: float,
                    M: int = DEFAULT_SAMPLES, hilbert: str = "on") -> float:
    """Strongest negative-harmonic line relative to the strongest positive one, in dBc.

    ``hilbert="off"`` drops the quadrature branch (double sideband) and
    ``"flip"`` negates it (lower sideband); both serve as fault injections.
    Clamped to ``[-200, 200]`` dBc.
    """
    C = line_spectrum(ex, geo, theta, M, hilbert)
    q_max = (len(C) - 1) // 2
    neg = np.abs(C[:q_max]) ** 2
    pos = np.abs(C[q_max + 1:]) ** 2
    top_pos, top_neg = pos.max(), neg.max()
    if top_pos == 0:
        return -DBC_FLOOR if top_neg > 0 else DBC_FLOOR
    if top_neg == 0:
        return DBC_FLOOR
    return float(np.clip(10.0 * np.log10(top_neg / top_pos), DBC_FLOOR, -DBC_FLOOR))
