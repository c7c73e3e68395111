"""
Calibration of the pulse parameters for an L-beam design.

The pulse spacing follows from the roll-off through the periodicity
constraint ``t_1% = T0 / 2``; the roll-off is picked so that harmonics
``1..L-1`` sit in the flat zone and ``L, L+1`` in the roll-off zone; the
amplitude is scaled so the modulated array radiates as much as the static one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .pulse import PulseParams, t_one_percent

__all__ = [
    "DesignError",
    "DesignSpec",
    "Placement",
    "RhoSolution",
    "solve_xi",
    "placement_of",
    "validate_placement",
    "solve_rho_for_L",
    "calibrate_amplitude",
    "make_design",
]

_RHO_GRID_STEP = 1e-3
_EDGE_TOL = 1e-9


class DesignError(ValueError):
    """Infeasible or inconsistent design parameters."""


@dataclass(frozen=True)
class DesignSpec:
    """A complete L-beam design with identical pulses on every element.

    ``xi = tau / T0``. The harmonic-zone boundaries ``omega_bar_1`` and
    ``omega_bar_2`` are derived, in units of the modulation frequency.
    """

    L: int
    rho: float
    xi: float
    amplitude: float = 1.0
    T0: float = 1.0
    L_max: int | None = None
    bandwidth: float | None = None

    def __post_init__(self):
        if self.L < 1:
            raise DesignError(f"L must be >= 1, got {self.L}")
        if not 0 < self.rho <= 1:
            raise DesignError(f"rho must lie in (0, 1], got {self.rho}")
        if not 0 < self.xi <= 1:
            raise DesignError(f"xi must lie in (0, 1], got {self.xi}")
        if not self.amplitude > 0:
            raise DesignError(f"amplitude must be > 0, got {self.amplitude}")
        if not self.T0 > 0:
            raise DesignError(f"T0 must be > 0, got {self.T0}")
        if self.L_max is None:
            object.__setattr__(self, "L_max", self.L + 1)
        if self.L_max < self.L + 1:
            raise DesignError(f"L_max must be >= L+1 = {self.L + 1}, got {self.L_max}")
        if self.bandwidth is not None and not 2 * math.pi / self.T0 > self.bandwidth:
            raise DesignError(
                f"modulation frequency 2pi/T0 = {2 * math.pi / self.T0:.6g} rad/s "
                f"must exceed the signal bandwidth {self.bandwidth:.6g} rad/s"
            )

    @property
    def omega_bar_1(self) -> float:
        return (1.0 - self.rho) / self.xi

    @property
    def omega_bar_2(self) -> float:
        return (1.0 + self.rho) / self.xi

    @property
    def omega0(self) -> float:
        return 2.0 * math.pi / self.T0

    @property
    def tau(self) -> float:
        return self.xi * self.T0

    @property
    def pulse(self) -> PulseParams:
        return PulseParams(self.amplitude, self.tau, self.rho)

    def with_amplitude(self, amplitude: float) -> "DesignSpec":
        return replace(self, amplitude=amplitude)

    def placement(self) -> "Placement":
        """Placement rules evaluated on this design's own ``xi``."""
        return placement_of(self.L, self.rho, self.xi)

    def overlap_ok(self) -> bool:
        """True when the pulse tail fits inside half a period."""
        return t_one_percent(self.pulse) <= 0.5 * self.T0 * (1 + 1e-12)


@dataclass(frozen=True)
class Placement:
    """Outcome of the harmonic placement check; truthy when all rules hold."""

    ok: bool
    L: int
    rho: float
    xi: float
    omega_bar_1: float
    omega_bar_2: float
    violation: str | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class RhoSolution:
    """Canonical roll-off for a beam count and the feasible set it came from."""

    L: int
    rho: float
    interval: tuple[float, float]
    intervals: tuple[tuple[float, float], ...] = field(default=())


def solve_xi(rho: float) -> float:
    """Duty parameter ``xi = tau / T0`` that puts ``t_1%`` exactly at ``T0 / 2``."""
    if not 0 < rho <= 1:
        raise DesignError(f"rho must lie in (0, 1], got {rho}")
    x = t_one_percent(PulseParams(1.0, 1.0, float(rho)))
    return 1.0 / (2.0 * x)


def placement_of(L: int, rho: float, xi: float) -> Placement:
    """Check ``L-1 < w1 <= L < L+1 <= w2 < L+2`` for the given ``(rho, xi)``."""
    w1 = (1.0 - rho) / xi
    w2 = (1.0 + rho) / xi
    checks = (
        (L - 1 < w1, f"flat zone too narrow: omega_bar_1={w1:.6g} <= L-1={L - 1}"),
        (w1 <= L, f"harmonic L={L} inside flat zone: omega_bar_1={w1:.6g} > L"),
        (L + 1 <= w2, f"harmonic L+1={L + 1} beyond roll-off: omega_bar_2={w2:.6g} < L+1"),
        (w2 < L + 2, f"harmonic L+2={L + 2} not removed: omega_bar_2={w2:.6g} >= L+2"),
    )
    violation = next((msg for ok, msg in checks if not ok), None)
    return Placement(violation is None, L, rho, xi, w1, w2, violation)


def validate_placement(L: int, rho: float) -> Placement:
    """Placement rules with ``xi`` calibrated from ``rho``."""
    if L < 1:
        raise DesignError(f"L must be >= 1, got {L}")
    return placement_of(L, rho, solve_xi(rho))


def _feasible(L, rho):
    return validate_placement(L, rho).ok


def _refine_edge(L, inside, outside):
    # bisection between a feasible and an infeasible roll-off
    while abs(outside - inside) > _EDGE_TOL:
        mid = 0.5 * (inside + outside)
        if _feasible(L, mid):
            inside = mid
        else:
            outside = mid
    return inside


def solve_rho_for_L(L: int) -> RhoSolution:
    """Roll-off satisfying the placement rules for ``L`` beams.

    The feasible set is located on a 0.001 grid over ``(0, 1]`` and its
    interval edges are refined by bisection. The widest interval is chosen
    and its midpoint returned.

    Raises
    ------
    DesignError
        If no roll-off in ``(0, 1]`` is feasible.
    """
    if L < 1:
        raise DesignError(f"L must be >= 1, got {L}")
    grid = np.round(np.arange(1, int(round(1 / _RHO_GRID_STEP)) + 1) * _RHO_GRID_STEP, 12)
    ok = np.array([_feasible(L, float(r)) for r in grid])
    if not ok.any():
        raise DesignError(f"no roll-off in (0, 1] satisfies the placement rules for L={L}")
    intervals = []
    i = 0
    while i < len(grid):
        if not ok[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(grid) and ok[j + 1]:
            j += 1
        lo = float(grid[i]) if i == 0 else _refine_edge(L, float(grid[i]), float(grid[i - 1]))
        hi = float(grid[j]) if j == len(grid) - 1 else _refine_edge(L, float(grid[j]), float(grid[j + 1]))
        intervals.append((lo, hi))
        i = j + 1
    best = max(intervals, key=lambda iv: iv[1] - iv[0])
    return RhoSolution(L, 0.5 * (best[0] + best[1]), best, tuple(intervals))


def calibrate_amplitude(spec: DesignSpec, N: int, probe: float | None = None) -> float:
    """Amplitude giving unit modulation efficiency.

    Radiated power scales with the square of the amplitude, so a single probe
    evaluation fixes it: ``A* = A0 / sqrt(eta_mod(A0))``.
    """
    from .efficiency import report

    a0 = spec.amplitude if probe is None else probe
    eta_mod = report(spec.with_amplitude(a0), N).eta_mod
    return a0 / math.sqrt(eta_mod)


def make_design(
    L: int,
    rho: float | None = None,
    *,
    T0: float = 1.0,
    amplitude: float | str = 1.0,
    N: int = 20,
    L_max: int | None = None,
    bandwidth: float | None = None,
) -> DesignSpec:
    """Build a validated design.

    ``rho=None`` picks the canonical roll-off for ``L``; ``amplitude="auto"``
    calibrates for unit modulation efficiency on ``N`` elements.

    Raises
    ------
    DesignError
        If the placement rules fail for the chosen roll-off.
    """
    if rho is None:
        rho = solve_rho_for_L(L).rho
    placement = validate_placement(L, rho)
    if not placement:
        raise DesignError(f"L={L}, rho={rho}: {placement.violation}")
    spec = DesignSpec(
        L=L,
        rho=float(rho),
        xi=placement.xi,
        amplitude=1.0 if amplitude == "auto" else float(amplitude),
        T0=T0,
        L_max=L_max,
        bandwidth=bandwidth,
    )
    if amplitude == "auto":
        spec = spec.with_amplitude(calibrate_amplitude(spec, N))
    return spec
