"""Nonlinear shallow-water solver over the sliding solid.

System (d = 1, nondimensional):

    dt zeta + dx(h * vbar) = dt b = -shape'(x - x_s) * v_s,
    dt vbar + dx zeta + eps * vbar * dx vbar = 0,

with h = 1 + eps*(zeta - b).  The solid obeys the friction/pressure ODE from
``solid``; the coupled update is a single RK4 on the joint state so the
coupling terms keep full temporal order.

Discretization: second-order central differences plus a small
fourth-difference dissipation ``-nu4 * dx**3 * D4`` on both equations.  The
moving-bottom source is projected to zero grid mean, which makes the
discrete total surface mass exactly conserved (the continuous source
integrates to zero; the projection removes only the quadrature residual of
the sampled shape derivative).

The functions are generic in eps; the shallow-water regime proper fixes
eps = 1, which run configuration enforces.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .bathymetry import Bathymetry, eval_b
from .core import FluidState, Grid1D, Parameters, SolidState, depth
from .errors import CflViolation, NonFiniteState, SmoothnessLost
from .solid import SolidConstants, solid_constants, solid_rhs_sv
from .stencils import d4x, ddx

__all__ = ["QuasilinearForm", "sv_fluid_rhs", "step_sv", "assemble_quasilinear"]


@dataclass(frozen=True)
class QuasilinearForm:
    """Per-cell matrices of the symmetrizable first-order form.

    a_matrix[i] = [[eps*vbar, h], [1, eps*vbar]],
    s_matrix[i] = diag(1, h)   (the symmetrizer),
    b_vector[i] = (-eps*vbar*shape' + shape'*v_s, 0),

    written for dt U + A dx U + B = 0 with U = (zeta, vbar).
    """

    a_matrix: np.ndarray  # (n, 2, 2)
    s_matrix: np.ndarray  # (n, 2, 2)
    b_vector: np.ndarray  # (n, 2)


def _bottom_source(grad_b: np.ndarray, v_s: float) -> np.ndarray:
    """Moving-bottom source for the elevation equation, zero-mean projected."""
    src = -grad_b * v_s
    return src - src.mean()


def sv_fluid_rhs(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
) -> tuple[np.ndarray, np.ndarray]:
    """Time derivatives (dt zeta, dt vbar) of the shallow-water system."""
    dx = grid.dx
    b0 = eval_b(bath, solid.x_s, grid, order=0)
    b1 = eval_b(bath, solid.x_s, grid, order=1)
    h = depth(fluid.zeta, b0, params)
    dz = -ddx(h * fluid.vbar, dx) + _bottom_source(b1, solid.v_s)
    dv = -ddx(fluid.zeta, dx) - params.eps * fluid.vbar * ddx(fluid.vbar, dx)
    if params.nu4 > 0.0:
        damp = params.nu4 * dx ** 3
        dz -= damp * d4x(fluid.zeta, dx)
        dv -= damp * d4x(fluid.vbar, dx)
    return dz, dv


def _sv_speed(fluid: FluidState, solid: SolidState, bath, params, grid) -> float:
    b0 = eval_b(bath, solid.x_s, grid, order=0)
    h = depth(fluid.zeta, b0, params)
    return float(np.max(np.abs(params.eps * fluid.vbar) + np.sqrt(h)))


def _check_finite(zeta, vbar, x, v):
    if not (
        np.all(np.isfinite(zeta))
        and np.all(np.isfinite(vbar))
        and np.isfinite(x)
        and np.isfinite(v)
    ):
        raise NonFiniteState("RK4 stage produced NaN/Inf")


def _joint_rk4(fluid, solid, dt, fluid_rhs, solid_rhs):
    """One RK4 step of the joint (zeta, vbar, x_s, v_s) state.

    ``solid_rhs`` is evaluated first at every stage so the acceleration can
    be substituted into the fluid source where the regime needs it.
    """
    z0, w0 = fluid.zeta, fluid.vbar
    x0, v0 = solid.x_s, solid.v_s

    def deriv(z, w, x, v):
        _check_finite(z, w, x, v)
        st_solid = SolidState(x_s=x, v_s=v)
        st_fluid = FluidState(zeta=z, vbar=w, time=fluid.time)
        a = solid_rhs(st_fluid, st_solid)
        dz, dw = fluid_rhs(st_fluid, replace(st_solid, a_s=a))
        return dz, dw, v, a

    k1 = deriv(z0, w0, x0, v0)
    k2 = deriv(
        z0 + 0.5 * dt * k1[0], w0 + 0.5 * dt * k1[1],
        x0 + 0.5 * dt * k1[2], v0 + 0.5 * dt * k1[3],
    )
    k3 = deriv(
        z0 + 0.5 * dt * k2[0], w0 + 0.5 * dt * k2[1],
        x0 + 0.5 * dt * k2[2], v0 + 0.5 * dt * k2[3],
    )
    k4 = deriv(
        z0 + dt * k3[0], w0 + dt * k3[1],
        x0 + dt * k3[2], v0 + dt * k3[3],
    )
    z1 = z0 + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
    w1 = w0 + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
    x1 = x0 + dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
    v1 = v0 + dt / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3])
    _check_finite(z1, w1, x1, v1)
    new_fluid = FluidState(zeta=z1, vbar=w1, time=fluid.time + dt)
    new_solid = SolidState(x_s=x1, v_s=v1)
    a1 = solid_rhs(new_fluid, new_solid)
    return new_fluid, replace(new_solid, a_s=a1)


def _check_smooth(fluid: FluidState, params: Parameters, grid: Grid1D) -> None:
    gmax = float(np.max(np.abs(ddx(fluid.zeta, grid.dx))))
    if gmax > params.gradient_limit:
        raise SmoothnessLost(
            f"|dx zeta| reached {gmax:.4g} at t={fluid.time:.6g} "
            f"(limit {params.gradient_limit:.4g})"
        )


def step_sv(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
    dt: float,
    consts: SolidConstants | None = None,
) -> tuple[FluidState, SolidState]:
    """Joint RK4 step of the coupled shallow-water/solid system."""
    if consts is None:
        consts = solid_constants(bath, params)
    speed = _sv_speed(fluid, solid, bath, params, grid)
    if dt > params.cfl * grid.dx / speed:
        raise CflViolation(
            f"dt={dt:.6g} exceeds CFL bound "
            f"{params.cfl * grid.dx / speed:.6g} (speed {speed:.4g})"
        )

    def fluid_rhs(f, s):
        return sv_fluid_rhs(f, s, bath, params, grid)

    def solid_rhs(f, s):
        return solid_rhs_sv(f, s, bath, consts, params, grid)

    new_fluid, new_solid = _joint_rk4(fluid, solid, dt, fluid_rhs, solid_rhs)
    _check_smooth(new_fluid, params, grid)
    return new_fluid, new_solid


def assemble_quasilinear(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
) -> QuasilinearForm:
    """Per-cell A, S, B of the first-order form (used by diagnostics)."""
    n = grid.n
    b0 = eval_b(bath, solid.x_s, grid, order=0)
    b1 = eval_b(bath, solid.x_s, grid, order=1)
    h = depth(fluid.zeta, b0, params)
    ev = params.eps * fluid.vbar
    a = np.empty((n, 2, 2))
    a[:, 0, 0] = ev
    a[:, 0, 1] = h
    a[:, 1, 0] = 1.0
    a[:, 1, 1] = ev
    s = np.zeros((n, 2, 2))
    s[:, 0, 0] = 1.0
    s[:, 1, 1] = h
    b = np.zeros((n, 2))
    b[:, 0] = -ev * b1 + b1 * solid.v_s
    return QuasilinearForm(a_matrix=a, s_matrix=s, b_vector=b)
