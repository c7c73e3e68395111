"""Linear array geometry along the z axis, positions in wavelengths."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["ArrayGeometry"]


@dataclass(frozen=True)
class ArrayGeometry:
    """Isotropic elements on the z axis.

    ``positions`` are in wavelengths, so ``k z_n = 2 pi positions[n]``.
    """

    positions: tuple[float, ...]

    def __post_init__(self):
        z = np.asarray(self.positions, dtype=float)
        if z.ndim != 1 or z.size < 1:
            raise ValueError("positions must be a non-empty 1-D sequence")
        if np.any(np.diff(z) <= 0):
            raise ValueError("positions must be strictly increasing")
        object.__setattr__(self, "positions", tuple(float(v) for v in z))

    @classmethod
    def uniform(cls, N: int, spacing: float = 0.5) -> "ArrayGeometry":
        if N < 1:
            raise ValueError(f"N must be >= 1, got {N}")
        if not spacing > 0:
            raise ValueError(f"spacing must be > 0, got {spacing}")
        return cls(tuple(spacing * np.arange(N)))

    @property
    def N(self) -> int:
        return len(self.positions)

    @property
    def z(self) -> np.ndarray:
        return np.asarray(self.positions)

    def steering_vector(self, theta_deg) -> np.ndarray:
        """``exp(j k z_n cos(theta))`` with shape ``(N, len(theta))``."""
        th = np.radians(np.atleast_1d(np.asarray(theta_deg, dtype=float)))
        return np.exp(2j * np.pi * np.outer(self.z, np.cos(th)))
