"""Fixed-point reference solver for the coupled shallow-water system.

Each sweep solves a *linear* hyperbolic system whose coefficients (depth,
advection speed, bottom source) are frozen from the previous iterate, then
integrates the nonlinear solid ODE driven by the fresh fluid iterate:

    iterate k+1 fluid:  dt U + A(U^k, X^k) dx U = -B(U^k, X^k),
    iterate k+1 solid:  a = F[U^{k+1}](X^{k+1}, V^{k+1}),

starting every sweep from the same initial data.  For a short enough
horizon the map contracts and the iterates converge to the coupled
solution; the successive-difference ratio exceeding one signals a horizon
too large for contraction.

The linear solves reuse the direct solver's stencils *and* its RK4 stage
structure: coefficients are frozen at the previous iterate's stage states,
so the converged fixed point satisfies exactly the same discrete update map
as ``step_sv``.  Discretization error therefore cancels in the comparison
and the match is limited only by the fixed-point tolerance.  This serves as
an independent desk-scale oracle, not a production solver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bathymetry import Bathymetry, eval_b
from .core import FluidState, Grid1D, Parameters, SolidState, depth
from .errors import CflViolation, NoContraction
from .saint_venant import _bottom_source
from .solid import solid_constants, solid_rhs_sv
from .stencils import d4x, ddx

__all__ = ["PicardConfig", "PicardResult", "picard_iterate"]


@dataclass(frozen=True)
class PicardConfig:
    """Iteration cap, fixed-point tolerance, and (short) time horizon."""

    horizon: float = 0.1
    tol: float = 1e-8
    max_iters: int = 30
    dt: float | None = None  # derived from the CFL bound when omitted

    def __post_init__(self):
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")
        if self.max_iters < 2:
            raise ValueError("max_iters must be at least 2")
        if self.horizon <= 0.0:
            raise ValueError("horizon must be positive")


@dataclass
class PicardResult:
    times: np.ndarray
    fluid_traj: list
    solid_traj: list
    iters: int
    diffs: list
    dt: float


class _IterateStore:
    """Node and RK4-stage states of one iterate (frozen-coefficient table)."""

    def __init__(self, n_steps, n):
        self.zeta = np.empty((n_steps, 4, n))
        self.vbar = np.empty((n_steps, 4, n))
        self.x = np.empty((n_steps, 4))
        self.v = np.empty((n_steps, 4))
        self.node_zeta = np.empty((n_steps + 1, n))
        self.node_vbar = np.empty((n_steps + 1, n))
        self.node_x = np.empty(n_steps + 1)
        self.node_v = np.empty(n_steps + 1)

    @classmethod
    def constant(cls, n_steps, fluid0, solid0):
        store = cls(n_steps, fluid0.zeta.size)
        store.zeta[:] = fluid0.zeta
        store.vbar[:] = fluid0.vbar
        store.x[:] = solid0.x_s
        store.v[:] = solid0.v_s
        store.node_zeta[:] = fluid0.zeta
        store.node_vbar[:] = fluid0.vbar
        store.node_x[:] = solid0.x_s
        store.node_v[:] = solid0.v_s
        return store

    def max_speed(self, bath, params, grid):
        speed = 0.0
        for j in range(self.zeta.shape[0]):
            for s in range(4):
                b0 = eval_b(bath, self.x[j, s], grid, order=0)
                h = depth(self.zeta[j, s], b0, params)
                speed = max(
                    speed,
                    float(np.max(np.abs(params.eps * self.vbar[j, s]) + np.sqrt(h))),
                )
        return speed


def _sweep(prev, fluid0, solid0, bath, consts, params, grid, dt, n_steps):
    """Integrate one fresh iterate against the frozen previous one."""
    dx = grid.dx
    damp = params.nu4 * dx ** 3
    cur = _IterateStore(n_steps, grid.n)
    z = fluid0.zeta.copy()
    w = fluid0.vbar.copy()
    x, v = solid0.x_s, solid0.v_s
    cur.node_zeta[0], cur.node_vbar[0] = z, w
    cur.node_x[0], cur.node_v[0] = x, v
    t = fluid0.time

    for j in range(n_steps):
        ks = []
        zs, ws, xs, vs = z, w, x, v
        for s, weight in enumerate((0.5, 0.5, 1.0, None)):
            cur.zeta[j, s], cur.vbar[j, s] = zs, ws
            cur.x[j, s], cur.v[j, s] = xs, vs
            # frozen coefficients from the previous iterate's same stage
            b0 = eval_b(bath, prev.x[j, s], grid, order=0)
            b1 = eval_b(bath, prev.x[j, s], grid, order=1)
            h_frozen = depth(prev.zeta[j, s], b0, params)
            adv = params.eps * prev.vbar[j, s]
            dz = -ddx(h_frozen * ws, dx) + _bottom_source(b1, prev.v[j, s])
            dw = -ddx(zs, dx) - adv * ddx(ws, dx)
            if params.nu4 > 0.0:
                dz -= damp * d4x(zs, dx)
                dw -= damp * d4x(ws, dx)
            a = solid_rhs_sv(
                FluidState(zeta=zs, vbar=ws, time=t),
                SolidState(x_s=xs, v_s=vs),
                bath, consts, params, grid,
            )
            ks.append((dz, dw, vs, a))
            if weight is not None:
                zs = z + weight * dt * dz
                ws = w + weight * dt * dw
                xs = x + weight * dt * vs
                vs = v + weight * dt * a
        z = z + dt / 6.0 * (ks[0][0] + 2 * ks[1][0] + 2 * ks[2][0] + ks[3][0])
        w = w + dt / 6.0 * (ks[0][1] + 2 * ks[1][1] + 2 * ks[2][1] + ks[3][1])
        x = x + dt / 6.0 * (ks[0][2] + 2 * ks[1][2] + 2 * ks[2][2] + ks[3][2])
        v = v + dt / 6.0 * (ks[0][3] + 2 * ks[1][3] + 2 * ks[2][3] + ks[3][3])
        t += dt
        cur.node_zeta[j + 1], cur.node_vbar[j + 1] = z, w
        cur.node_x[j + 1], cur.node_v[j + 1] = x, v
    return cur


def _difference(a: _IterateStore, b: _IterateStore, dx: float) -> float:
    """sup-over-time (L2 fluid difference + solid displacement difference)."""
    dz = a.node_zeta - b.node_zeta
    dw = a.node_vbar - b.node_vbar
    l2 = np.sqrt(dx * (np.sum(dz * dz, axis=1) + np.sum(dw * dw, axis=1)))
    return float(np.max(l2) + np.max(np.abs(a.node_x - b.node_x)))


def picard_iterate(
    fluid0: FluidState,
    solid0: SolidState,
    cfg: PicardConfig,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
) -> PicardResult:
    """Run the fixed-point iteration on [0, horizon].

    Raises NoContraction when the successive-difference ratio exceeds one
    twice in a row (horizon too large) or the cap is exhausted.
    """
    consts = solid_constants(bath, params)
    b0 = eval_b(bath, solid0.x_s, grid, order=0)
    h0 = depth(fluid0.zeta, b0, params)
    speed0 = float(np.max(np.abs(params.eps * fluid0.vbar) + np.sqrt(h0)))
    dt = cfg.dt
    if dt is None:
        # leave headroom below the CFL bound so iterates that modestly
        # exceed the initial speed are not mistaken for divergence
        n_steps = max(
            1, int(np.ceil(cfg.horizon * speed0 / (0.75 * params.cfl * grid.dx)))
        )
        dt = cfg.horizon / n_steps
    else:
        n_steps = max(1, int(round(cfg.horizon / dt)))
        dt = cfg.horizon / n_steps
    if dt > params.cfl * grid.dx / speed0:
        raise CflViolation(
            f"picard dt={dt:.6g} exceeds the CFL bound at the initial state"
        )

    prev = _IterateStore.constant(n_steps, fluid0, solid0)
    diffs: list[float] = []
    grew = 0
    for it in range(1, cfg.max_iters + 1):
        if prev.max_speed(bath, params, grid) * dt > params.cfl * grid.dx:
            raise NoContraction(
                f"iterate {it - 1} violates the CFL bound: the iterates are "
                "growing; shrink the horizon"
            )
        cur = _sweep(prev, fluid0, solid0, bath, consts, params, grid, dt, n_steps)
        diff = _difference(cur, prev, grid.dx)
        diffs.append(diff)
        if len(diffs) >= 2 and diffs[-2] > 0.0:
            grew = grew + 1 if diff > diffs[-2] else 0
            if grew >= 2:
                raise NoContraction(
                    f"successive differences grew twice in a row "
                    f"({diffs[-3]:.3g} -> {diffs[-2]:.3g} -> {diff:.3g}); "
                    "horizon too large for contraction"
                )
        prev = cur
        if diff < cfg.tol:
            times = fluid0.time + dt * np.arange(n_steps + 1)
            fluid_traj = [
                FluidState(zeta=cur.node_zeta[j].copy(),
                           vbar=cur.node_vbar[j].copy(),
                           time=float(times[j]))
                for j in range(n_steps + 1)
            ]
            solid_traj = [
                SolidState(x_s=float(cur.node_x[j]), v_s=float(cur.node_v[j]))
                for j in range(n_steps + 1)
            ]
            return PicardResult(
                times=times, fluid_traj=fluid_traj, solid_traj=solid_traj,
                iters=it, diffs=diffs, dt=dt,
            )
    raise NoContraction(
        f"no convergence within {cfg.max_iters} sweeps "
        f"(last difference {diffs[-1]:.3g}, tol {cfg.tol:.3g})"
    )
