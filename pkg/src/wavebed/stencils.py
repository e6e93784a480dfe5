"""Periodic finite-difference stencils shared by both fluid solvers.

Second-order central differences throughout; the fourth-difference operator
feeds the artificial dissipation that suppresses odd-even decoupling of the
central scheme.  All stencils are symmetric, so even/odd parity of fields
about a grid-aligned center is preserved to roundoff.
"""

from __future__ import annotations

import numpy as np

__all__ = ["ddx", "d2x", "d4x"]


def ddx(f: np.ndarray, dx: float) -> np.ndarray:
    """Central first derivative on the periodic grid."""
    return (np.roll(f, -1) - np.roll(f, 1)) / (2.0 * dx)


def d2x(f: np.ndarray, dx: float) -> np.ndarray:
    """Central second derivative on the periodic grid."""
    return (np.roll(f, -1) - 2.0 * f + np.roll(f, 1)) / (dx * dx)


def d4x(f: np.ndarray, dx: float) -> np.ndarray:
    """Central fourth derivative on the periodic grid."""
    return (
        np.roll(f, -2) - 4.0 * np.roll(f, -1) + 6.0 * f
        - 4.0 * np.roll(f, 1) + np.roll(f, 2)
    ) / dx ** 4
