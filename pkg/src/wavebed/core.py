"""Dimensionless parameters, the periodic grid, and the state containers.

Everything downstream works with the scaled variables: the undisturbed depth
is 1, wave speeds are order 1, and the two small parameters are

* ``mu``  -- shallowness (depth over wavelength, squared),
* ``eps`` -- nonlinearity (surface amplitude over depth).

The water column height at a point is ``h = 1 + eps*(zeta - b)`` where
``zeta`` is the surface elevation and ``b`` the bottom elevation, both order
one.  The bottom amplitude carries the same ``eps`` factor as the surface by
construction, so a single nonlinearity parameter covers both.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MinimalDepthViolation, NonFiniteState

__all__ = ["Parameters", "Grid1D", "FluidState", "SolidState", "depth"]


@dataclass(frozen=True)
class Parameters:
    """Dimensionless constants of the regime plus numerical settings.

    Physical constants
    ------------------
    mu : shallowness parameter, 0 <= mu <= 1 (mu = 0 is the degenerate
        non-dispersive limit, kept valid for consistency checks).
    eps : nonlinearity parameter, > 0.  The shallow-water solver runs at
        eps = 1; the Boussinesq solver requires eps <= mu.
    c_fric : Coulomb friction coefficient, >= 0.
    delta_bar : friction regularization, > 0.  The sliding law divides by
        ``|v| + delta_bar`` so the force is smooth through v = 0.
    m_tilde : scaled solid mass, > 0.
    p_atm : atmospheric pressure offset in units of rho*g*H0, >= 0.
    h_min : minimal admissible water depth, > 0.

    Numerical settings
    ------------------
    cfl : Courant number for the explicit steppers.
    nu4 : fourth-difference artificial viscosity coefficient (the term added
        to the right-hand sides is ``-nu4 * dx**3 * D4``).
    gradient_limit : max |d zeta/dx| before a run aborts as non-smooth.
    """

    mu: float
    eps: float
    c_fric: float = 0.1
    delta_bar: float = 1e-2
    m_tilde: float = 1.0
    p_atm: float = 1.0
    h_min: float = 0.05
    cfl: float = 0.4
    nu4: float = 0.02
    gradient_limit: float = 50.0

    def __post_init__(self):
        problems = []
        if not 0.0 <= self.mu <= 1.0:
            problems.append(f"mu must lie in [0, 1], got {self.mu}")
        if self.eps <= 0.0:
            problems.append(f"eps must be positive, got {self.eps}")
        if self.c_fric < 0.0:
            problems.append(f"c_fric must be nonnegative, got {self.c_fric}")
        if self.delta_bar <= 0.0:
            problems.append(f"delta_bar must be positive, got {self.delta_bar}")
        if self.m_tilde <= 0.0:
            problems.append(f"m_tilde must be positive, got {self.m_tilde}")
        if self.p_atm < 0.0:
            problems.append(f"p_atm must be nonnegative, got {self.p_atm}")
        if self.h_min <= 0.0:
            problems.append(f"h_min must be positive, got {self.h_min}")
        if not 0.0 < self.cfl:
            problems.append(f"cfl must be positive, got {self.cfl}")
        if self.nu4 < 0.0:
            problems.append(f"nu4 must be nonnegative, got {self.nu4}")
        if problems:
            raise ValueError("; ".join(problems))


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic grid on [0, length) with nodes x_i = i * dx."""

    n: int
    length: float
    periodic: bool = True

    def __post_init__(self):
        if self.n < 8:
            raise ValueError(f"grid needs at least 8 cells, got {self.n}")
        if self.length <= 0.0:
            raise ValueError(f"domain length must be positive, got {self.length}")
        if not self.periodic:
            raise ValueError("only periodic grids are supported")
        object.__setattr__(self, "_x", np.arange(self.n) * (self.length / self.n))

    @property
    def dx(self) -> float:
        return self.length / self.n

    @property
    def x(self) -> np.ndarray:
        """Node coordinates (shared read-only array)."""
        return self._x

    def wavenumbers(self) -> np.ndarray:
        """Physical wavenumbers matching numpy's fft ordering."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dx)

    def rfft_wavenumbers(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.rfftfreq(self.n, d=self.dx)


@dataclass(frozen=True)
class FluidState:
    """Surface elevation and depth-averaged velocity at one time level."""

    zeta: np.ndarray
    vbar: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        zeta = np.asarray(self.zeta, dtype=float)
        vbar = np.asarray(self.vbar, dtype=float)
        if zeta.shape != vbar.shape or zeta.ndim != 1:
            raise ValueError("zeta and vbar must be 1-d arrays of equal length")
        if not (np.all(np.isfinite(zeta)) and np.all(np.isfinite(vbar))):
            raise NonFiniteState("fluid state contains NaN or Inf")
        object.__setattr__(self, "zeta", zeta)
        object.__setattr__(self, "vbar", vbar)

    @property
    def n(self) -> int:
        return self.zeta.size


@dataclass(frozen=True)
class SolidState:
    """Solid displacement and velocity, plus the last computed acceleration.

    ``a_s`` caches the most recent right-hand-side evaluation of the solid
    equation; the Boussinesq fluid source reads it so the acceleration is
    substituted explicitly rather than solved for implicitly.
    """

    x_s: float = 0.0
    v_s: float = 0.0
    a_s: float | None = None

    def __post_init__(self):
        vals = [self.x_s, self.v_s] + ([] if self.a_s is None else [self.a_s])
        if not all(np.isfinite(v) for v in vals):
            raise NonFiniteState("solid state contains NaN or Inf")


def depth(zeta: np.ndarray, b: np.ndarray, params: Parameters) -> np.ndarray:
    """Water column height h = 1 + eps*(zeta - b).

    Raises MinimalDepthViolation when any cell drops below ``params.h_min``,
    which signals solver breakdown (near-dry state) rather than a
    recoverable condition.
    """
    zeta = np.asarray(zeta, dtype=float)
    b = np.asarray(b, dtype=float)
    if zeta.shape != b.shape:
        raise ValueError("zeta and b must have the same shape")
    h = 1.0 + params.eps * (zeta - b)
    hmin = h.min()
    if hmin < params.h_min:
        raise MinimalDepthViolation(
            f"min depth {hmin:.6g} below threshold {params.h_min:.6g}"
        )
    return h
