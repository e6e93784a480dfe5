"""Energy functionals, discrete Sobolev norms, and runtime bound checks.

The monitored energy couples the wave field and the solid velocity:

    E_B = 1/2 int zeta**2 + 1/2 int h |vbar|**2
        + mu/6 int h |dx vbar|**2 + 1/(2 eps) |v_s|**2,

nonnegative whenever the depth stays above its floor.  Norms are spectral
(Parseval on the periodic grid); spatial derivatives inside E_B use the same
central stencil as the solvers.

Two a priori velocity bounds become runtime assertions:

* shallow-water: |v_s(t)| <= |v0| + (1/m_tilde) * max_tau ||zeta(tau)||_L2
  * ||shape'||_L2 * t  (a Gronwall bound; the max runs over tau <= t),
* dispersive: exp(-sqrt(eps) c0 t) |v_s(t)|**2 <= eps ||U0||_X0**2 + |v0|**2
  + eps mu c0 T ||shape||_H3**2, with c0 a calibration constant supplied by
  the test family (it stands in for an inaccessible analytical constant).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bathymetry import Bathymetry, eval_b
from .core import FluidState, Grid1D, Parameters, SolidState, depth
from .errors import BoundViolated
from .solid import ClosureKind, solid_constants, solid_rhs_bous
from .stencils import ddx

__all__ = [
    "EnergyReport",
    "GrowthFit",
    "VelocityBoundReport",
    "energy_eb",
    "sobolev_norm",
    "xs_norm",
    "check_velocity_bound",
    "fit_growth_rate",
    "pressure_consistency_probe",
]


def _spectral_hs_sq(f: np.ndarray, s: float, grid: Grid1D) -> float:
    """Squared H^s norm via Parseval: L * sum (1 + k^2)^s |c_k|^2."""
    c = np.fft.fft(f) / grid.n
    k = grid.wavenumbers()
    return float(grid.length * np.sum((1.0 + k * k) ** s * np.abs(c) ** 2))


def spectral_sobolev(f: np.ndarray, s: float, grid: Grid1D) -> float:
    """H^s norm for arbitrary s (internal helper, unrestricted order)."""
    return np.sqrt(_spectral_hs_sq(f, s, grid))


def sobolev_norm(f: np.ndarray, s: int, grid: Grid1D) -> float:
    """Discrete H^s norm of a field, s restricted to the monitored orders."""
    if s not in (0, 1):
        raise ValueError(f"monitored Sobolev orders are 0 and 1, got {s}")
    return spectral_sobolev(f, s, grid)


def xs_norm(fluid: FluidState, params: Parameters, grid: Grid1D, s: int = 0) -> float:
    """Coupled-system norm ||zeta||_Hs + ||vbar||_Hs + sqrt(mu)||vbar||_Hs+1."""
    if s not in (0, 1):
        raise ValueError(f"monitored Sobolev orders are 0 and 1, got {s}")
    return (
        spectral_sobolev(fluid.zeta, s, grid)
        + spectral_sobolev(fluid.vbar, s, grid)
        + np.sqrt(params.mu) * spectral_sobolev(fluid.vbar, s + 1, grid)
    )


def energy_eb(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
) -> float:
    """Coupled wave-structure energy (trapezoidal quadrature, central dx)."""
    dx = grid.dx
    b0 = eval_b(bath, solid.x_s, grid, order=0)
    h = depth(fluid.zeta, b0, params)
    dv = ddx(fluid.vbar, dx)
    quad = (
        0.5 * np.sum(fluid.zeta ** 2)
        + 0.5 * np.sum(h * fluid.vbar ** 2)
        + params.mu / 6.0 * np.sum(h * dv * dv)
    ) * dx
    return float(quad + solid.v_s ** 2 / (2.0 * params.eps))


@dataclass
class GrowthFit:
    """Result of the exponential-rate fit of an energy history."""

    rate: float
    insufficient_growth: bool
    window: tuple[float, float] | None = None


def fit_growth_rate(times, energies) -> GrowthFit:
    """Least-squares slope of log E over the window where E >= 2 E(0).

    Returns rate 0 with the ``insufficient_growth`` flag set when the energy
    never doubles.
    """
    t = np.asarray(times, dtype=float)
    e = np.asarray(energies, dtype=float)
    if t.size < 10:
        raise ValueError(f"need at least 10 samples, got {t.size}")
    if np.any(e <= 0.0):
        raise ValueError("energies must be positive for a log fit")
    idx = np.nonzero(e >= 2.0 * e[0])[0]
    if idx.size < 2:
        return GrowthFit(rate=0.0, insufficient_growth=True)
    sel = slice(idx[0], None)
    slope = np.polyfit(t[sel], np.log(e[sel]), 1)[0]
    return GrowthFit(
        rate=float(slope),
        insufficient_growth=False,
        window=(float(t[idx[0]]), float(t[-1])),
    )


@dataclass
class VelocityBoundReport:
    """Outcome of the a priori velocity-bound check along a trajectory."""

    ok: bool
    worst_margin: float
    margins: np.ndarray
    first_violation_time: float | None = None


def check_velocity_bound(
    times,
    solid_traj,
    fluid_traj,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
    mode: str = "sv",
    c0: float = 1.0,
    raise_on_violation: bool = False,
) -> VelocityBoundReport:
    """Assert the regime's solid-velocity bound at every sample time.

    ``mode='sv'`` checks the Gronwall bound with the running max of
    ||zeta||_L2; ``mode='bous'`` checks the exponential energy bound with
    the supplied calibration constant c0.  The margin at each time is
    (bound - monitored quantity); the report carries the worst one.
    """
    t = np.asarray(times, dtype=float)
    if len(solid_traj) != t.size or len(fluid_traj) != t.size:
        raise ValueError("trajectories must be time-aligned with `times`")
    vs = np.array([s.v_s for s in solid_traj])
    v0 = abs(vs[0])
    if mode == "sv":
        grad_b_l2 = np.sqrt(grid.dx * np.sum(eval_b(bath, 0.0, grid, order=1) ** 2))
        zeta_l2 = np.array(
            [np.sqrt(grid.dx * np.sum(f.zeta ** 2)) for f in fluid_traj]
        )
        running_max = np.maximum.accumulate(zeta_l2)
        bound = v0 + running_max * grad_b_l2 * t / params.m_tilde
        margins = bound - np.abs(vs)
    elif mode == "bous":
        u0 = fluid_traj[0]
        x0_norm = xs_norm(u0, params, grid, s=0)
        b_h3 = spectral_sobolev(eval_b(bath, 0.0, grid, order=0), 3, grid)
        horizon = t[-1] - t[0]
        rhs = (
            params.eps * x0_norm ** 2
            + v0 ** 2
            + params.eps * params.mu * c0 * horizon * b_h3 ** 2
        )
        lhs = np.exp(-np.sqrt(params.eps) * c0 * t) * vs ** 2
        margins = rhs - lhs
    else:
        raise ValueError(f"mode must be 'sv' or 'bous', got {mode!r}")

    bad = np.nonzero(margins < 0.0)[0]
    first_violation = float(t[bad[0]]) if bad.size else None
    report = VelocityBoundReport(
        ok=bad.size == 0,
        worst_margin=float(margins.min()),
        margins=margins,
        first_violation_time=first_violation,
    )
    if raise_on_violation and not report.ok:
        raise BoundViolated(
            f"velocity bound violated at t={first_violation:.6g}",
            time=first_violation,
        )
    return report


def pressure_consistency_probe(
    fluid: FluidState,
    solid: SolidState,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
) -> tuple[np.ndarray, np.ndarray, float]:
    """Hydrostatic vs refined bottom pressure, plus their sup difference.

    Hydrostatic: P = p_atm + h.  Refined adds the dispersive correction
    (eps*mu/2) * Lap zeta + eps*mu * dtt b, where dtt b comes from the chain
    rule with the cached solid acceleration.  The Laplacian here is spectral
    (diagnostic accuracy, independent of the solver stencils).
    """
    b0 = eval_b(bath, solid.x_s, grid, order=0)
    b1 = eval_b(bath, solid.x_s, grid, order=1)
    b2 = eval_b(bath, solid.x_s, grid, order=2)
    h = depth(fluid.zeta, b0, params)
    hydro = params.p_atm + h

    a_s = solid.a_s
    if a_s is None:
        consts = solid_constants(bath, params)
        a_s = solid_rhs_bous(
            fluid, solid, bath, consts, params, grid, ClosureKind.HYDROSTATIC_BOUS
        )
    k = grid.wavenumbers()
    lap_zeta = np.real(np.fft.ifft(-(k * k) * np.fft.fft(fluid.zeta)))
    dtt_b = b2 * solid.v_s ** 2 - b1 * a_s
    refined = hydro + 0.5 * params.eps * params.mu * lap_zeta \
        + params.eps * params.mu * dtt_b
    return hydro, refined, float(np.max(np.abs(refined - hydro)))


@dataclass
class EnergyReport:
    """Per-run energy history: one entry per output time.

    ``growth_rate`` is the fitted exponential rate of the history (0 when
    the energy never doubles); ``v_bound_ok`` flags the velocity bound per
    output time.
    """

    times: np.ndarray
    e_b: np.ndarray
    mass: np.ndarray
    l2_zeta: np.ndarray
    l2_v: np.ndarray
    xs0: np.ndarray
    xs1: np.ndarray
    x_s: np.ndarray
    v_s: np.ndarray
    v_bound_margin: np.ndarray
    v_bound_ok: np.ndarray
    growth_rate: float = 0.0

    CSV_COLUMNS = (
        "t", "e_b", "mass", "l2_zeta", "l2_v", "xs0", "xs1",
        "x_s", "v_s", "v_bound_margin",
    )

    def rows(self):
        for i in range(self.times.size):
            yield (
                self.times[i], self.e_b[i], self.mass[i], self.l2_zeta[i],
                self.l2_v[i], self.xs0[i], self.xs1[i], self.x_s[i],
                self.v_s[i], self.v_bound_margin[i],
            )


def build_energy_report(
    times,
    fluid_traj,
    solid_traj,
    bath: Bathymetry,
    params: Parameters,
    grid: Grid1D,
    mode: str = "sv",
    c0: float = 1.0,
) -> EnergyReport:
    """Assemble the full diagnostic history of a simulated trajectory."""
    t = np.asarray(times, dtype=float)
    dx = grid.dx
    e_b = np.array(
        [energy_eb(f, s, bath, params, grid)
         for f, s in zip(fluid_traj, solid_traj)]
    )
    mass = np.array([dx * np.sum(f.zeta) for f in fluid_traj])
    l2z = np.array([sobolev_norm(f.zeta, 0, grid) for f in fluid_traj])
    l2v = np.array([sobolev_norm(f.vbar, 0, grid) for f in fluid_traj])
    xs0 = np.array([xs_norm(f, params, grid, 0) for f in fluid_traj])
    xs1 = np.array([xs_norm(f, params, grid, 1) for f in fluid_traj])
    x_s = np.array([s.x_s for s in solid_traj])
    v_s = np.array([s.v_s for s in solid_traj])
    vb = check_velocity_bound(
        t, solid_traj, fluid_traj, bath, params, grid, mode=mode, c0=c0
    )
    if t.size >= 10 and np.all(e_b > 0.0):
        growth = fit_growth_rate(t, e_b).rate
    else:
        growth = 0.0
    return EnergyReport(
        times=t, e_b=e_b, mass=mass, l2_zeta=l2z, l2_v=l2v,
        xs0=xs0, xs1=xs1, x_s=x_s, v_s=v_s,
        v_bound_margin=vb.margins, v_bound_ok=vb.margins >= 0.0,
        growth_rate=growth,
    )
