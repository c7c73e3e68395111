"""
Radiated-power bookkeeping and the efficiency split ``eta = eta_TMA * eta_mod``.

``eta_TMA`` is the share of the time-modulated power carried by the ``L``
exploited harmonics; ``eta_mod`` compares the total time-modulated power with
that of the static uniform array, ``4 pi N``.

Powers follow the ``|2 G_nq|^2`` convention, i.e. ``p_q = 4 pi sum_n |2 G_nq|^2``,
which is what integrating ``|F_q|^2`` over the sphere gives. Ratios do not
depend on that choice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .design import DesignError, DesignSpec
from .modulation import ExcitationMatrix, coeff_P

__all__ = [
    "CONVENTION",
    "EfficiencyReport",
    "power_harmonic",
    "closed_form_powers",
    "report",
    "report_from_excitations",
    "level_db",
]

CONVENTION = "p_q = 4*pi*sum_n |2*G_nq|^2"


@dataclass(frozen=True)
class EfficiencyReport:
    p_q: tuple[float, ...]
    P_U_TM: float
    P_R_TM: float
    P_R_ST: float
    eta_TMA: float
    eta_mod: float
    eta: float
    level_L_db: float = float("nan")
    level_L1_db: float = float("nan")
    omega_bar_1: float = float("nan")
    omega_bar_2: float = float("nan")
    convention: str = CONVENTION

    def to_dict(self) -> dict:
        return {
            "convention": self.convention,
            "p_q": list(self.p_q),
            "P_U_TM": self.P_U_TM,
            "P_R_TM": self.P_R_TM,
            "P_R_ST": self.P_R_ST,
            "eta_TMA": self.eta_TMA,
            "eta_mod": self.eta_mod,
            "eta": self.eta,
            "level_L_db": self.level_L_db,
            "level_L1_db": self.level_L1_db,
            "omega_bar_1": self.omega_bar_1,
            "omega_bar_2": self.omega_bar_2,
        }


def power_harmonic(spec: DesignSpec, N: int, q: int) -> float:
    """Mean radiated power at harmonic ``q`` for ``N`` identical pulses (``16 pi N P_q^2``)."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    return 16.0 * math.pi * N * coeff_P(spec, q) ** 2


def level_db(spec: DesignSpec, q: int) -> float:
    """Amplitude of harmonic ``q`` relative to the flat zone, in dB."""
    ratio = coeff_P(spec, q) / (0.5 * spec.amplitude * spec.xi)
    return 20.0 * math.log10(ratio) if ratio > 0 else float("-inf")


def closed_form_powers(spec: DesignSpec, N: int) -> tuple[float, float]:
    """Useful and total time-modulated power, ``(P_U_TM, P_R_TM)``."""
    L, A, xi, w1 = spec.L, spec.amplitude, spec.xi, spec.omega_bar_1
    span = 2.0 / xi - 2.0 * w1

    def taper(q):
        return A * xi / 4.0 * (1.0 + math.cos(math.pi * (q - w1) / span))

    pre = 16.0 * math.pi * N
    P_U = pre * ((L - 1) * (A * xi / 2.0) ** 2 + taper(L) ** 2)
    P_R = P_U + pre * taper(L + 1) ** 2
    return P_U, P_R


def report(spec: DesignSpec, N: int) -> EfficiencyReport:
    """Closed-form efficiency report for ``N`` identical pulses.

    Raises
    ------
    DesignError
        If the placement rules fail; the closed forms assume exactly ``L-1``
        flat-zone and two roll-off harmonics.
    """
    placement = spec.placement()
    if not placement:
        raise DesignError(f"closed forms need valid placement: {placement.violation}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    P_U, P_R = closed_form_powers(spec, N)
    P_ST = 4.0 * math.pi * N
    eta_TMA = P_U / P_R
    eta_mod = P_R / P_ST
    return EfficiencyReport(
        p_q=tuple(power_harmonic(spec, N, q) for q in range(1, spec.L + 2)),
        P_U_TM=P_U,
        P_R_TM=P_R,
        P_R_ST=P_ST,
        eta_TMA=eta_TMA,
        eta_mod=eta_mod,
        eta=eta_TMA * eta_mod,
        level_L_db=level_db(spec, spec.L),
        level_L1_db=level_db(spec, spec.L + 1),
        omega_bar_1=spec.omega_bar_1,
        omega_bar_2=spec.omega_bar_2,
    )


def report_from_excitations(ex: ExcitationMatrix, L: int) -> EfficiencyReport:
    """Efficiency from arbitrary (possibly per-element distinct) excitations.

    Harmonics ``1..L`` count as useful; every column of ``ex`` is radiated.
    """
    p = 4.0 * np.pi * np.sum(np.abs(2.0 * ex.G) ** 2, axis=0)
    P_U = float(p[:L].sum())
    P_R = float(p.sum())
    P_ST = 4.0 * math.pi * ex.N
    eta_TMA = P_U / P_R if P_R > 0 else float("nan")
    return EfficiencyReport(
        p_q=tuple(float(v) for v in p),
        P_U_TM=P_U,
        P_R_TM=P_R,
        P_R_ST=P_ST,
        eta_TMA=eta_TMA,
        eta_mod=P_R / P_ST,
        eta=P_U / P_ST,
    )
