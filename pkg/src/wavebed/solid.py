"""Newton dynamics of the solid: friction law and pressure-force closures.

The solid slides horizontally under two forces.  A regularized Coulomb
friction force proportional to the normal load

    friction accel = -(c_fric / sqrt(mu)) * N * v / (|v| + delta_bar),

where the bracket N collects the dimensionless normal force (atmospheric
and hydrostatic contributions integrated over the footprint), and the
horizontal resultant of the bottom pressure,

    pressure accel = (eps-weight / m_tilde) * integral(zeta * shape'(x - x_s)).

Two hydrostatic closures are provided, one per flow regime, differing only
in how the nonlinearity parameter enters the constants; the refined closure
adds the order-mu pressure correction (the surface Laplacian term) inside
the friction bracket.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .bathymetry import Bathymetry, eval_b, integrate_over_support
from .core import FluidState, Grid1D, Parameters, SolidState
from .errors import NonFiniteState, RegimeViolation
from .stencils import d2x

__all__ = [
    "SolidConstants",
    "ClosureKind",
    "solid_constants",
    "friction_factor",
    "friction_rate_bound",
    "solid_rhs_sv",
    "solid_rhs_bous",
    "added_mass_matrix",
    "step_solid",
]


class ClosureKind(enum.Enum):
    """Which asymptotic closure feeds the solid's pressure force."""

    HYDROSTATIC_SV = "sv"
    HYDROSTATIC_BOUS = "bous"
    REFINED_BOUS = "bous_refined"


@dataclass(frozen=True)
class SolidConstants:
    """Precomputed scalars of the solid equation.

    c_solid / c_tilde_solid are the constant parts of the friction bracket
    in the two regimes; added_mass is the scalar eps*mu*int((shape')**2),
    reported as data (the explicit stepper does not feed it back).
    """

    c_solid: float
    c_tilde_solid: float
    added_mass: float


def solid_constants(bath: Bathymetry, params: Parameters) -> SolidConstants:
    s = bath.support_measure
    vol = bath.volume
    m = params.m_tilde
    c_solid = 1.0 + (s / m) * (params.p_atm + 1.0) - vol / m
    c_tilde = params.eps + (s / m) * (params.p_atm + 1.0) - params.eps * vol / m
    return SolidConstants(
        c_solid=c_solid,
        c_tilde_solid=c_tilde,
        added_mass=added_mass_matrix(bath, params),
    )


def added_mass_matrix(bath: Bathymetry, params: Parameters) -> float:
    """Scalar added-mass coefficient eps * mu * int((shape')**2) >= 0."""
    return params.eps * params.mu * bath.grad_sq_integral


def friction_factor(z: float, delta_bar: float) -> float:
    """Regularized sliding direction z / (|z| + delta_bar), magnitude < 1."""
    if delta_bar <= 0.0:
        raise ValueError("delta_bar must be positive")
    return z / (abs(z) + delta_bar)


def friction_rate_bound(
    consts: SolidConstants, params: Parameters, closure: ClosureKind
) -> float:
    """Linearized friction decay rate near v = 0 (explicit-stability bound).

    The regularized law behaves like ``dv/dt = -lambda v`` inside the layer
    |v| < delta_bar with lambda = c_fric * bracket / (sqrt(mu) * delta_bar).
    An explicit RK4 step must keep dt * lambda inside the stability
    interval, which for small delta_bar or (in the dispersive regime) small
    eps is stricter than the advective CFL bound.  Returns 0 when friction
    is off.
    """
    if params.c_fric == 0.0:
        return 0.0
    if closure is ClosureKind.HYDROSTATIC_SV:
        bracket = abs(consts.c_solid)
    else:
        bracket = abs(consts.c_tilde_solid) / params.eps
    return params.c_fric * bracket / (np.sqrt(params.mu) * params.delta_bar)


def _friction_accel(bracket: float, v_s: float, params: Parameters) -> float:
    if params.c_fric == 0.0:
        return 0.0
    if params.mu == 0.0:
        raise RegimeViolation("friction requires mu > 0 (singular prefactor)")
    return (
        -(params.c_fric / np.sqrt(params.mu))
        * bracket
        * friction_factor(v_s, params.delta_bar)
    )


def solid_rhs_sv(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    consts: SolidConstants,
    params: Parameters,
    grid: Grid1D,
) -> float:
    """Solid acceleration under the shallow-water hydrostatic closure."""
    m = params.m_tilde
    zeta_int = integrate_over_support(fluid.zeta, bath, solid.x_s, grid)
    bracket = consts.c_solid + zeta_int / m
    grad_b = eval_b(bath, solid.x_s, grid, order=1)
    pressure = grid.dx * float(np.dot(fluid.zeta, grad_b)) / m
    return _friction_accel(bracket, solid.v_s, params) + pressure


def solid_rhs_bous(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    consts: SolidConstants,
    params: Parameters,
    grid: Grid1D,
    closure: ClosureKind = ClosureKind.HYDROSTATIC_BOUS,
) -> float:
    """Solid acceleration under the weakly nonlinear closures.

    The refined variant adds (mu / (2 m_tilde)) * int(Lap zeta) over the
    footprint inside the friction bracket; it is only meaningful in the
    dispersive regime, hence the guard.
    """
    if closure is ClosureKind.HYDROSTATIC_SV:
        return solid_rhs_sv(fluid, solid, bath, consts, params, grid)
    eps, m = params.eps, params.m_tilde
    if closure is ClosureKind.REFINED_BOUS and eps > params.mu:
        raise RegimeViolation(
            f"refined closure needs eps <= mu, got eps={eps}, mu={params.mu}"
        )
    zeta_int = integrate_over_support(fluid.zeta, bath, solid.x_s, grid)
    bracket = consts.c_tilde_solid / eps + zeta_int / m
    if closure is ClosureKind.REFINED_BOUS:
        lap = d2x(fluid.zeta, grid.dx)
        bracket += params.mu / (2.0 * m) * integrate_over_support(
            lap, bath, solid.x_s, grid
        )
    grad_b = eval_b(bath, solid.x_s, grid, order=1)
    pressure = eps * grid.dx * float(np.dot(fluid.zeta, grad_b)) / m
    return _friction_accel(bracket, solid.v_s, params) + pressure


def step_solid(solid: SolidState, rhs, dt: float) -> SolidState:
    """One classical RK4 step of the solid alone.

    ``rhs`` maps a SolidState to an acceleration and is re-evaluated at
    every stage state.  The final acceleration cache is the RHS at the
    updated state.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    x, v = solid.x_s, solid.v_s

    def stage(xs, vs):
        a = rhs(replace(solid, x_s=xs, v_s=vs, a_s=None))
        if not (np.isfinite(a) and np.isfinite(xs) and np.isfinite(vs)):
            raise NonFiniteState("solid RK4 stage produced NaN/Inf")
        return vs, a

    k1x, k1v = stage(x, v)
    k2x, k2v = stage(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v)
    k3x, k3v = stage(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v)
    k4x, k4v = stage(x + dt * k3x, v + dt * k3v)
    x_new = x + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
    v_new = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    a_new = rhs(replace(solid, x_s=x_new, v_s=v_new, a_s=None))
    if not (np.isfinite(x_new) and np.isfinite(v_new) and np.isfinite(a_new)):
        raise NonFiniteState("solid RK4 step produced NaN/Inf")
    return replace(solid, x_s=x_new, v_s=v_new, a_s=a_new)
