"""Run orchestration: time loop, CSV emission, and the run manifest.

Outputs per run directory:

* ``snapshots.csv``  -- columns t, x, zeta, vbar (n rows per sample time),
* ``solid.csv``      -- columns t, x_s, v_s, a_s,
* ``energy.csv``     -- the diagnostic history, one row per sample time,
* ``manifest.json``  -- resolved config, build identifier, wall time, step
  count, and on failure the failing timestep and error.

Floats are written with 17 significant digits so files round-trip losslessly
and identical configs give byte-identical outputs (no randomness anywhere,
fixed-order reductions).
"""

from __future__ import annotations

import json
import platform
import subprocess
import time as _time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .boussinesq import DispersiveOperator, step_bous
from .config import RunConfig, expand_sweep, initial_state
from .diagnostics import build_energy_report
from .errors import WavebedError
from .saint_venant import step_sv
from .solid import friction_rate_bound, solid_constants
from .core import depth
from .bathymetry import eval_b

__all__ = ["RunResult", "run", "run_sweep", "simulate"]

_FMT = "{:.17g}"


def _fmt(value) -> str:
    return _FMT.format(float(value))


def _build_identifier() -> str:
    try:
        rev = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            capture_output=True, text=True, timeout=5, check=False,
        ).stdout.strip()
    except (OSError, subprocess.SubprocessError):
        rev = ""
    return f"wavebed {__version__}" + (f" ({rev})" if rev else "")


@dataclass
class RunResult:
    status: int
    outdir: Path
    manifest: dict


def simulate(cfg: RunConfig, collect_every: int = 1):
    """Integrate a config and return (times, fluid_traj, solid_traj, dt).

    Library entry point shared by the CLI runner and the verification
    suite; raises solver errors directly.
    """
    params = cfg.parameters()
    grid = cfg.grid()
    bath = cfg.bath()
    consts = solid_constants(bath, params)
    fluid, solid = initial_state(cfg)

    if cfg.solver == "sv":
        b0 = eval_b(bath, solid.x_s, grid, order=0)
        h0 = depth(fluid.zeta, b0, params)
        speed = float(np.max(np.abs(params.eps * fluid.vbar) + np.sqrt(h0)))
        dt_max = params.cfl * grid.dx / (1.05 * speed)
        op = None
    else:
        dt_max = params.cfl * grid.dx
        op = DispersiveOperator(params.mu, grid)
    # explicit stability of the stiff regularized-friction layer
    lam = friction_rate_bound(consts, params, cfg.closure_kind())
    if lam > 0.0:
        dt_max = min(dt_max, 1.25 / lam)

    interval = cfg.output_interval
    steps_per_output = max(1, int(np.ceil(interval / dt_max)))
    dt = interval / steps_per_output
    horizon = cfg.effective_horizon
    n_outputs = max(1, int(round(horizon / interval)))

    times = [fluid.time]
    fluid_traj = [fluid]
    solid_traj = [solid]
    closure = cfg.closure_kind()
    for _ in range(n_outputs):
        for _ in range(steps_per_output):
            if cfg.solver == "sv":
                fluid, solid = step_sv(
                    fluid, solid, bath, params, grid, dt, consts=consts
                )
            else:
                fluid, solid = step_bous(
                    fluid, solid, bath, params, grid, dt,
                    closure=closure, op=op, consts=consts,
                )
        times.append(fluid.time)
        fluid_traj.append(fluid)
        solid_traj.append(solid)
    return np.asarray(times), fluid_traj, solid_traj, dt


def _write_snapshots(path: Path, grid, times, fluid_traj) -> None:
    with path.open("w", newline="") as fh:
        fh.write("t,x,zeta,vbar\n")
        for t, f in zip(times, fluid_traj):
            ts = _fmt(t)
            for xi, zi, vi in zip(grid.x, f.zeta, f.vbar):
                fh.write(f"{ts},{_fmt(xi)},{_fmt(zi)},{_fmt(vi)}\n")


def _write_solid(path: Path, times, solid_traj) -> None:
    with path.open("w", newline="") as fh:
        fh.write("t,x_s,v_s,a_s\n")
        for t, s in zip(times, solid_traj):
            a = 0.0 if s.a_s is None else s.a_s
            fh.write(f"{_fmt(t)},{_fmt(s.x_s)},{_fmt(s.v_s)},{_fmt(a)}\n")


def _write_energy(path: Path, report) -> None:
    with path.open("w", newline="") as fh:
        fh.write(",".join(report.CSV_COLUMNS) + "\n")
        for row in report.rows():
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def run(cfg: RunConfig, outdir=None, seedless: bool = False) -> RunResult:
    """Execute one run, writing artifacts; solver errors are recorded in the
    manifest and re-raised."""
    outdir = Path(outdir) if outdir is not None else Path(cfg.out)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = {
        "config": cfg.as_dict(),
        "build": _build_identifier(),
        "python": platform.python_version(),
        "numpy": np.__version__,
        "seedless": bool(seedless),
        "rng_used": False,
        "status": "running",
    }
    started = _time.perf_counter()
    try:
        times, fluid_traj, solid_traj, dt = simulate(cfg)
    except WavebedError as exc:
        manifest.update(
            status="failed",
            error=type(exc).__name__,
            message=str(exc),
            wall_time_s=_time.perf_counter() - started,
        )
        (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2))
        raise

    grid = cfg.grid()
    report = build_energy_report(
        times, fluid_traj, solid_traj, cfg.bath(), cfg.parameters(), grid,
        mode=cfg.solver, c0=cfg.c0,
    )
    _write_snapshots(outdir / "snapshots.csv", grid, times, fluid_traj)
    _write_solid(outdir / "solid.csv", times, solid_traj)
    _write_energy(outdir / "energy.csv", report)
    manifest.update(
        status="completed",
        dt=dt,
        n_steps=int(round((times[-1] - times[0]) / dt)),
        final_time=float(times[-1]),
        growth_rate=report.growth_rate,
        v_bound_ok=bool(report.v_bound_ok.all()),
        wall_time_s=_time.perf_counter() - started,
    )
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2))
    return RunResult(status=0, outdir=outdir, manifest=manifest)


def _run_child(args):
    cfg, outdir = args
    try:
        res = run(cfg, outdir)
        return res.status, str(outdir)
    except WavebedError:
        return 1, str(outdir)


def run_sweep(cfg: RunConfig, outdir=None, workers: int = 1) -> list[RunResult]:
    """Expand the sweep block and run every member, optionally in parallel.

    Each member owns its subdirectory ``sweep_XXX``; a top-level
    ``sweep.json`` records the expansion.
    """
    outdir = Path(outdir) if outdir is not None else Path(cfg.out)
    outdir.mkdir(parents=True, exist_ok=True)
    members = expand_sweep(cfg)
    entries = []
    for i, member in enumerate(members):
        sub = outdir / f"sweep_{i:03d}"
        swept = {k: getattr(member, k) for k in sorted(cfg.sweep)} if cfg.sweep else {}
        entries.append({"dir": sub.name, "values": swept})
    (outdir / "sweep.json").write_text(json.dumps(entries, indent=2))

    results = []
    jobs = [(m, outdir / e["dir"]) for m, e in zip(members, entries)]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            statuses = list(pool.map(_run_child, jobs))
        for (status, sub) in statuses:
            manifest = json.loads((Path(sub) / "manifest.json").read_text())
            results.append(RunResult(status=status, outdir=Path(sub), manifest=manifest))
    else:
        for member, sub in jobs:
            results.append(run(member, sub))
    return results
