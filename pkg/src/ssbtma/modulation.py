"""
Per-element harmonic excitations and the time-domain control signals.

Each element is driven by a periodic Nyquist pulse train ``p_n`` convolved
with a steering signal ``v_n`` over one period. The resulting Fourier
coefficients are ``G_nq = V_nq P_nq`` with ``V_nq = exp(-j 2 pi q theta_nq / T0)``.
The element multiplies its carrier by ``g_n + j hilbert(g_n)``, so only
positive harmonics radiate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
from scipy.integrate import quad

from .design import DesignSpec
from .geometry import ArrayGeometry
from .pulse import eval_time

__all__ = [
    "ANALYTIC",
    "TRUNCATED",
    "SteeringPlan",
    "ExcitationMatrix",
    "coeff_P",
    "coeff_P_truncated",
    "steering_delays",
    "coeff_V",
    "make_plan",
    "build_excitations",
    "synth_time",
]

ANALYTIC = "analytic-series"
TRUNCATED = "truncated-pulse"
MODES = (ANALYTIC, TRUNCATED)


def coeff_P(spec: DesignSpec, q):
    """Fourier coefficient of the periodized pulse at harmonic ``q``.

    Flat at ``A xi / 2`` for ``|q| < w1``, cosine taper up to ``w2``, zero beyond.
    """
    qa = np.abs(np.asarray(q, dtype=float))
    w1, w2 = spec.omega_bar_1, spec.omega_bar_2
    flat = 0.5 * spec.amplitude * spec.xi
    out = np.where(qa < w1, flat, 0.0)
    taper = (qa >= w1) & (qa <= w2)
    out = np.where(
        taper,
        0.5 * flat * (1.0 + np.cos(np.pi * (qa - w1) / (2.0 / spec.xi - 2.0 * w1))),
        out,
    )
    return float(out) if np.ndim(out) == 0 else out


def coeff_P_truncated(spec: DesignSpec, q):
    """Fourier coefficient of a single pulse truncated to ``[-T0/2, T0/2]``."""
    p = spec.pulse
    T0 = spec.T0

    def one(qq):
        w = abs(qq) * spec.omega0
        if w == 0:
            val, _ = quad(lambda t: eval_time(p, t), 0.0, 0.5 * T0, limit=200)
        else:
            val, _ = quad(lambda t: eval_time(p, t), 0.0, 0.5 * T0, weight="cos", wvar=w)
        return 2.0 * val / T0

    qs = np.asarray(q)
    out = np.vectorize(one, otypes=[float])(qs)
    return float(out) if np.ndim(out) == 0 else out


def _cosd(theta_deg):
    # exact zero at broadside
    return np.sin(np.radians(90.0 - np.asarray(theta_deg, dtype=float)))


def steering_delays(theta_deg, n, q, T0: float = 1.0, spacing: float = 0.5):
    """Delay ``theta_nq`` pointing harmonic ``q`` of element ``n`` at ``theta_deg``.

    ``theta_nq = z_n T0 cos(theta) / q`` with ``z_n = n * spacing`` in
    wavelengths. With ``spacing=1`` this reduces to ``n T0 cos(theta) / q``.
    """
    if np.any(np.asarray(q) < 1):
        raise ValueError("harmonic index q must be >= 1")
    return n * spacing * T0 * _cosd(theta_deg) / q


@dataclass(frozen=True)
class SteeringPlan:
    """Target angle per harmonic and the per-element delays realizing it.

    ``delays[n, q-1]`` is in the same time unit as ``T0``.
    """

    targets: Mapping[int, float]
    delays: np.ndarray
    T0: float = 1.0

    def __post_init__(self):
        d = np.array(self.delays, dtype=float)
        d.setflags(write=False)
        object.__setattr__(self, "delays", d)
        object.__setattr__(self, "targets", dict(self.targets))

    @property
    def N(self) -> int:
        return self.delays.shape[0]

    @property
    def n_harmonics(self) -> int:
        return self.delays.shape[1]


def make_plan(spec: DesignSpec, geo: ArrayGeometry, beams: Mapping[int, float] | None = None) -> SteeringPlan:
    """Steering plan for ``spec.L_max`` harmonics.

    ``beams`` maps harmonic index to target angle in degrees; harmonics not
    listed point at broadside (90 deg), which is also where ``L+1`` goes
    by default.
    """
    beams = dict(beams or {})
    for q, th in beams.items():
        if not 1 <= q <= spec.L_max:
            raise ValueError(f"beam harmonic q={q} outside [1, {spec.L_max}]")
        if not 0 < th < 180:
            raise ValueError(f"beam angle {th} deg outside (0, 180)")
    targets = {q: float(beams.get(q, 90.0)) for q in range(1, spec.L_max + 1)}
    qs = np.arange(1, spec.L_max + 1)
    cos_t = _cosd([targets[q] for q in qs])
    delays = np.outer(geo.z, cos_t / qs) * spec.T0
    return SteeringPlan(targets, delays, spec.T0)


def coeff_V(plan: SteeringPlan, n, q):
    """Unit-modulus steering coefficient ``exp(-j 2 pi q theta_nq / T0)``."""
    q = np.asarray(q)
    return np.exp(-2j * np.pi * q * plan.delays[n, q - 1] / plan.T0)


@dataclass(frozen=True)
class ExcitationMatrix:
    """Complex excitations ``G = V * P``; column ``j`` is harmonic ``q = j + 1``."""

    G: np.ndarray
    P: np.ndarray
    V: np.ndarray
    T0: float = 1.0
    mode: str = ANALYTIC

    def __post_init__(self):
        for name in ("G", "P", "V"):
            a = np.array(getattr(self, name))
            a.setflags(write=False)
            object.__setattr__(self, name, a)
        if not self.G.shape == self.P.shape == self.V.shape:
            raise ValueError("G, P and V must share one shape")

    @property
    def N(self) -> int:
        return self.G.shape[0]

    @property
    def harmonics(self) -> np.ndarray:
        return np.arange(1, self.G.shape[1] + 1)

    @property
    def phase(self) -> np.ndarray:
        """Excitation phases wrapped to ``(-pi, pi]``."""
        ph = np.angle(self.G)
        return np.where(ph <= -np.pi, ph + 2 * np.pi, ph)

    def column(self, q: int) -> np.ndarray:
        if not 1 <= q <= self.G.shape[1]:
            return np.zeros(self.N, dtype=complex)
        return self.G[:, q - 1]

    def with_G(self, G) -> "ExcitationMatrix":
        """Copy carrying other excitations (used for superposition checks)."""
        return ExcitationMatrix(G, self.P, self.V, self.T0, self.mode)


def build_excitations(
    spec: DesignSpec, plan: SteeringPlan, N: int | None = None, mode: str = ANALYTIC
) -> ExcitationMatrix:
    """Entrywise ``G_nq = V_nq P_nq`` for ``q = 1..L_max``."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    N = plan.N if N is None else N
    if plan.N != N:
        raise ValueError(f"plan has {plan.N} elements, expected {N}")
    if plan.n_harmonics != spec.L_max:
        raise ValueError(f"plan covers {plan.n_harmonics} harmonics, design needs {spec.L_max}")
    qs = np.arange(1, spec.L_max + 1)
    per_q = coeff_P(spec, qs) if mode == ANALYTIC else coeff_P_truncated(spec, qs)
    P = np.broadcast_to(per_q, (N, len(qs))).copy()
    V = np.exp(-2j * np.pi * qs * plan.delays / plan.T0)
    return ExcitationMatrix(V * P, P, V, spec.T0, mode)


def synth_time(ex: ExcitationMatrix, t, n=None):
    """Control signal ``g_n(t)`` and its Hilbert transform.

    ``g_n(t) = 2 sum_q |G_nq| cos(q w0 t + phi_nq)``; the Hilbert pair uses
    ``sin``. With ``n=None`` all elements are returned stacked on axis 0.
    """
    t = np.asarray(t, dtype=float)
    G = ex.G if n is None else ex.G[n]
    w0 = 2.0 * np.pi / ex.T0
    phasors = np.exp(1j * w0 * np.multiply.outer(ex.harmonics, t))
    s = 2.0 * np.tensordot(G, phasors, axes=([-1], [0]))
    return s.real, s.imag
