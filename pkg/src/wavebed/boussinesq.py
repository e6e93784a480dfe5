"""Weakly nonlinear dispersive solver over the sliding solid.

System (d = 1, nondimensional):

    dt zeta + dx(h * vbar) = -shape'(x - x_s) * v_s,
    (1 - mu/3 dxx) dt vbar + dx zeta + eps * vbar * dx vbar
        = -(mu/2) * dx( shape''(x - x_s) * v_s**2 - shape'(x - x_s) * a_s ),

valid in the regime eps <= mu.  The right-hand side of the velocity
equation is the chain-rule expansion of the second time derivative of the
bottom; the solid acceleration a_s is substituted explicitly from the solid
ODE at the same stage state, keeping the stepper fully explicit.

The elliptic factor (1 - mu/3 dxx) is inverted exactly on the periodic grid
by Fourier multipliers 1 + (mu/3) k**2, all >= 1, so the solve is
unconditionally well posed.  mu = 0 degenerates to the shallow-water
right-hand side bit for bit, which doubles as a consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bathymetry import Bathymetry, eval_b
from .core import FluidState, Grid1D, Parameters, SolidState, depth
from .errors import CflViolation, RegimeViolation
from .solid import ClosureKind, SolidConstants, solid_constants, solid_rhs_bous
from .saint_venant import (
    _bottom_source,
    _check_smooth,
    _joint_rk4,
    sv_fluid_rhs,
)
from .stencils import d4x, ddx

__all__ = ["DispersiveOperator", "helmholtz_solve", "bous_fluid_rhs", "step_bous"]


@dataclass(frozen=True)
class DispersiveOperator:
    """Fourier representation of (1 - mu/3 * Laplacian) on the periodic grid."""

    mu: float
    grid: Grid1D

    def __post_init__(self):
        k = self.grid.rfft_wavenumbers()
        object.__setattr__(self, "multipliers", 1.0 + (self.mu / 3.0) * k * k)

    def apply(self, f: np.ndarray) -> np.ndarray:
        """Forward operator (used by tests to verify the inverse)."""
        return np.fft.irfft(np.fft.rfft(f) * self.multipliers, n=self.grid.n)


def helmholtz_solve(rhs: np.ndarray, op: DispersiveOperator) -> np.ndarray:
    """Solve (1 - mu/3 dxx) u = rhs by Fourier division."""
    if op.mu == 0.0:
        return np.array(rhs, dtype=float, copy=True)
    return np.fft.irfft(np.fft.rfft(rhs) / op.multipliers, n=op.grid.n)


def _check_regime(params: Parameters) -> None:
    # mu = 0 is the exact degenerate limit (identity dispersive factor);
    # everything else must respect eps <= mu.
    if params.mu != 0.0 and params.eps > params.mu:
        raise RegimeViolation(
            f"dispersive regime needs eps <= mu, got eps={params.eps}, "
            f"mu={params.mu}"
        )


def bous_fluid_rhs(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
    op: DispersiveOperator | None = None,
    consts: SolidConstants | None = None,
    closure: ClosureKind = ClosureKind.HYDROSTATIC_BOUS,
) -> tuple[np.ndarray, np.ndarray]:
    """Time derivatives (dt zeta, dt vbar) of the dispersive system.

    The solid acceleration is taken from ``solid.a_s`` when present
    (the joint stepper fills it per stage); otherwise it is computed here
    with the requested closure.
    """
    _check_regime(params)
    if params.mu == 0.0:
        return sv_fluid_rhs(fluid, solid, bath, params, grid)
    if op is None:
        op = DispersiveOperator(params.mu, grid)
    dx = grid.dx
    b0 = eval_b(bath, solid.x_s, grid, order=0)
    b1 = eval_b(bath, solid.x_s, grid, order=1)
    b2 = eval_b(bath, solid.x_s, grid, order=2)
    h = depth(fluid.zeta, b0, params)

    a_s = solid.a_s
    if a_s is None:
        if consts is None:
            consts = solid_constants(bath, params)
        a_s = solid_rhs_bous(fluid, solid, bath, consts, params, grid, closure)

    dz = -ddx(h * fluid.vbar, dx) + _bottom_source(b1, solid.v_s)
    bottom_accel = b2 * solid.v_s ** 2 - b1 * a_s
    rhs_v = (
        -ddx(fluid.zeta, dx)
        - params.eps * fluid.vbar * ddx(fluid.vbar, dx)
        - 0.5 * params.mu * ddx(bottom_accel, dx)
    )
    dv = helmholtz_solve(rhs_v, op)
    if params.nu4 > 0.0:
        damp = params.nu4 * dx ** 3
        dz -= damp * d4x(fluid.zeta, dx)
        dv -= damp * d4x(fluid.vbar, dx)
    return dz, dv


def step_bous(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
    dt: float,
    closure: ClosureKind = ClosureKind.HYDROSTATIC_BOUS,
    op: DispersiveOperator | None = None,
    consts: SolidConstants | None = None,
) -> tuple[FluidState, SolidState]:
    """Joint RK4 step of the coupled dispersive/solid system.

    Phase speeds are bounded by 1, so the hyperbolic bound dt <= cfl * dx
    suffices.
    """
    _check_regime(params)
    if dt > params.cfl * grid.dx:
        raise CflViolation(
            f"dt={dt:.6g} exceeds CFL bound {params.cfl * grid.dx:.6g}"
        )
    if op is None:
        op = DispersiveOperator(params.mu, grid)
    if consts is None:
        consts = solid_constants(bath, params)

    def fluid_rhs(f, s):
        return bous_fluid_rhs(
            f, s, bath, params, grid, op=op, consts=consts, closure=closure
        )

    def solid_rhs(f, s):
        return solid_rhs_bous(f, s, bath, consts, params, grid, closure)

    new_fluid, new_solid = _joint_rk4(fluid, solid, dt, fluid_rhs, solid_rhs)
    _check_smooth(new_fluid, params, grid)
    return new_fluid, new_solid
