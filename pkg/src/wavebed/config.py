"""Run configuration: YAML ingestion, validation, and sweep expansion.

The config file is a flat mapping with one optional nested block::

    solver: bous            # "sv" | "bous"
    closure: bous           # "sv" | "bous" | "bous_refined"
    mu: 0.1
    eps: 0.1                # defaults: 1 for sv, mu for bous
    c_fric: 0.1
    delta_bar: 0.01
    m_tilde: 1.0
    p_atm: 1.0
    h_min: 0.05
    n: 256
    length: 20.0
    bathymetry: bump        # only built-in profile
    amplitude: 0.3
    radius: 1.0
    center: 10.0            # defaults to length/2
    initial: "gaussian(0.1, 5.0, 1.0)"   # rest | gaussian(a,x0,w) | sine(a,m)
    v0: 0.0
    horizon: 5.0
    horizon_mode: fixed     # "fixed" | "eps_sqrt_scaled" (runs to horizon/sqrt(eps))
    output_interval: 0.5
    cfl: 0.4
    nu4: 0.02
    gradient_limit: 50.0
    c0: 1.0                 # calibration constant of the dispersive bound
    out: runs
    sweep:                  # optional; cartesian product over listed keys
      eps: [0.01, 0.04, 0.16]

Validation collects *all* violations and reports each with the offending
key.  In ``sine(a, m)`` the second argument is the integer mode count on the
periodic box, i.e. the profile is a*sin(2*pi*m*x/length).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import yaml

from .bathymetry import Bathymetry
from .core import FluidState, Grid1D, Parameters, SolidState
from .errors import ParseError, ValidationError
from .solid import ClosureKind

__all__ = ["RunConfig", "load_config", "expand_sweep", "initial_state"]

_DEFAULTS = {
    "solver": "sv",
    "closure": None,  # derived from solver when omitted
    "mu": None,  # required
    "eps": None,  # derived: 1 for sv, mu for bous
    "c_fric": 0.1,
    "delta_bar": 1e-2,
    "m_tilde": 1.0,
    "p_atm": 1.0,
    "h_min": 0.05,
    "n": 256,
    "length": 20.0,
    "bathymetry": "bump",
    "amplitude": 0.3,
    "radius": 1.0,
    "center": None,  # derived: length / 2
    "initial": "rest",
    "v0": 0.0,
    "horizon": 5.0,
    "horizon_mode": "fixed",
    "output_interval": 0.5,
    "cfl": 0.4,
    "nu4": 0.02,
    "gradient_limit": 50.0,
    "c0": 1.0,
    "out": "runs",
}

_PROFILE_RE = re.compile(r"^\s*(\w+)\s*(?:\((.*)\))?\s*$")


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved, validated run description."""

    solver: str
    closure: str
    mu: float
    eps: float
    c_fric: float
    delta_bar: float
    m_tilde: float
    p_atm: float
    h_min: float
    n: int
    length: float
    bathymetry: str
    amplitude: float
    radius: float
    center: float
    initial: str
    v0: float
    horizon: float
    horizon_mode: str
    output_interval: float
    cfl: float
    nu4: float
    gradient_limit: float
    c0: float
    out: str
    sweep: dict = field(default_factory=dict)

    @property
    def effective_horizon(self) -> float:
        if self.horizon_mode == "eps_sqrt_scaled":
            return self.horizon / math.sqrt(self.eps)
        return self.horizon

    def parameters(self) -> Parameters:
        return Parameters(
            mu=self.mu, eps=self.eps, c_fric=self.c_fric,
            delta_bar=self.delta_bar, m_tilde=self.m_tilde,
            p_atm=self.p_atm, h_min=self.h_min, cfl=self.cfl,
            nu4=self.nu4, gradient_limit=self.gradient_limit,
        )

    def grid(self) -> Grid1D:
        return Grid1D(n=self.n, length=self.length)

    def bath(self) -> Bathymetry:
        return Bathymetry(
            amplitude=self.amplitude, radius=self.radius, center=self.center
        )

    def closure_kind(self) -> ClosureKind:
        return ClosureKind(self.closure)

    def as_dict(self) -> dict:
        d = {k: getattr(self, k) for k in _DEFAULTS}
        d["sweep"] = dict(self.sweep)
        return d


def _parse_profile(spec: str):
    m = _PROFILE_RE.match(spec)
    if m is None:
        raise ValueError(f"cannot parse initial profile {spec!r}")
    name = m.group(1)
    args = []
    if m.group(2):
        args = [float(a) for a in m.group(2).split(",")]
    return name, args


def initial_state(cfg: RunConfig) -> tuple[FluidState, SolidState]:
    """Build the t = 0 states from the named initial-condition profile."""
    grid = cfg.grid()
    x = grid.x
    name, args = _parse_profile(cfg.initial)
    if name == "rest":
        zeta = np.zeros(grid.n)
    elif name == "gaussian":
        a, x0, w = args
        xi = x - x0
        xi -= grid.length * np.round(xi / grid.length)
        zeta = a * np.exp(-((xi / w) ** 2))
    elif name == "sine":
        a, mode = args
        zeta = a * np.sin(2.0 * np.pi * mode * x / grid.length)
    else:
        raise ValueError(f"unknown initial profile {name!r}")
    fluid = FluidState(zeta=zeta, vbar=np.zeros(grid.n), time=0.0)
    solid = SolidState(x_s=0.0, v_s=cfg.v0)
    return fluid, solid


def _validate(raw: dict, source: str) -> RunConfig:
    problems = []
    unknown = set(raw) - set(_DEFAULTS) - {"sweep"}
    for key in sorted(unknown):
        problems.append(f"{key}: unknown key")

    merged = dict(_DEFAULTS)
    merged.update({k: v for k, v in raw.items() if k in _DEFAULTS})
    sweep = raw.get("sweep", {}) or {}

    if merged["mu"] is None:
        problems.append("mu: required key missing")
        merged["mu"] = 0.1
    if merged["solver"] not in ("sv", "bous"):
        problems.append(f"solver: must be 'sv' or 'bous', got {merged['solver']!r}")
        merged["solver"] = "sv"
    if merged["eps"] is None:
        merged["eps"] = 1.0 if merged["solver"] == "sv" else merged["mu"]
    if merged["closure"] is None:
        merged["closure"] = "sv" if merged["solver"] == "sv" else "bous"
    if merged["center"] is None:
        merged["center"] = merged["length"] / 2.0

    numeric = [
        "mu", "eps", "c_fric", "delta_bar", "m_tilde", "p_atm", "h_min",
        "length", "amplitude", "radius", "center", "v0", "horizon",
        "output_interval", "cfl", "nu4", "gradient_limit", "c0",
    ]
    for key in numeric:
        try:
            merged[key] = float(merged[key])
        except (TypeError, ValueError):
            problems.append(f"{key}: expected a number, got {merged[key]!r}")
            merged[key] = 1.0
    try:
        merged["n"] = int(merged["n"])
    except (TypeError, ValueError):
        problems.append(f"n: expected an integer, got {merged['n']!r}")
        merged["n"] = 256

    # range checks mirroring Parameters / Grid1D invariants, reported per key
    if not 0.0 < merged["mu"] <= 1.0:
        problems.append(f"mu: must lie in (0, 1], got {merged['mu']}")
    if merged["eps"] <= 0.0:
        problems.append(f"eps: must be positive, got {merged['eps']}")
    if merged["delta_bar"] <= 0.0:
        problems.append(f"delta_bar: must be positive, got {merged['delta_bar']}")
    if merged["m_tilde"] <= 0.0:
        problems.append(f"m_tilde: must be positive, got {merged['m_tilde']}")
    if merged["c_fric"] < 0.0:
        problems.append(f"c_fric: must be nonnegative, got {merged['c_fric']}")
    if merged["p_atm"] < 0.0:
        problems.append(f"p_atm: must be nonnegative, got {merged['p_atm']}")
    if merged["h_min"] <= 0.0:
        problems.append(f"h_min: must be positive, got {merged['h_min']}")
    if merged["n"] < 8:
        problems.append(f"n: grid needs at least 8 cells, got {merged['n']}")
    if merged["length"] <= 0.0:
        problems.append(f"length: must be positive, got {merged['length']}")
    if merged["horizon"] <= 0.0:
        problems.append(f"horizon: must be positive, got {merged['horizon']}")
    if merged["output_interval"] <= 0.0:
        problems.append(
            f"output_interval: must be positive, got {merged['output_interval']}"
        )

    # regime guards (cross-field)
    if merged["solver"] == "sv" and merged["eps"] != 1.0:
        problems.append(
            f"eps: shallow-water runs require eps = 1, got {merged['eps']}"
        )
    if merged["solver"] == "bous" and merged["eps"] > merged["mu"]:
        problems.append(
            f"eps: dispersive regime requires eps <= mu, got "
            f"eps={merged['eps']}, mu={merged['mu']}"
        )
    if merged["closure"] not in ("sv", "bous", "bous_refined"):
        problems.append(f"closure: unknown closure {merged['closure']!r}")
    elif merged["solver"] == "sv" and merged["closure"] != "sv":
        problems.append("closure: shallow-water runs use closure 'sv'")
    elif merged["solver"] == "bous" and merged["closure"] == "sv":
        problems.append("closure: dispersive runs use 'bous' or 'bous_refined'")

    if merged["bathymetry"] != "bump":
        problems.append(
            f"bathymetry: only the built-in 'bump' profile is available, "
            f"got {merged['bathymetry']!r}"
        )
    if merged["radius"] <= 0.0:
        problems.append(f"radius: must be positive, got {merged['radius']}")
    elif 2.0 * merged["radius"] >= merged["length"]:
        problems.append(
            f"radius: solid footprint {2 * merged['radius']} does not fit in "
            f"the box of length {merged['length']}"
        )

    if merged["horizon_mode"] not in ("fixed", "eps_sqrt_scaled"):
        problems.append(
            f"horizon_mode: must be 'fixed' or 'eps_sqrt_scaled', "
            f"got {merged['horizon_mode']!r}"
        )

    try:
        _parse_profile(str(merged["initial"]))
    except ValueError as exc:
        problems.append(f"initial: {exc}")

    if not isinstance(sweep, dict):
        problems.append("sweep: must be a mapping of key -> list of values")
        sweep = {}
    else:
        for key, values in sweep.items():
            if key not in _DEFAULTS or key in ("sweep", "out"):
                problems.append(f"sweep.{key}: not a sweepable key")
            elif not isinstance(values, (list, tuple)) or not values:
                problems.append(f"sweep.{key}: expected a non-empty list")

    if problems:
        raise ValidationError([f"{source}: {p}" for p in problems])
    merged["initial"] = str(merged["initial"])
    merged["out"] = str(merged["out"])
    return RunConfig(**merged, sweep=dict(sweep))


def load_config(path) -> RunConfig:
    """Read and validate a YAML run config, reporting all violations."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"config file {path} does not exist")
    try:
        raw = yaml.safe_load(path.read_text())
    except yaml.YAMLError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: expected a key-value mapping at top level")
    return _validate(raw, str(path))


def expand_sweep(cfg: RunConfig) -> list[RunConfig]:
    """Cartesian-product expansion of the sweep block (identity if absent)."""
    if not cfg.sweep:
        return [cfg]
    keys = sorted(cfg.sweep)
    combos = itertools.product(*(cfg.sweep[k] for k in keys))
    out = []
    for combo in combos:
        updates = dict(zip(keys, combo))
        # keep derived defaults coherent when eps follows mu
        if "mu" in updates and "eps" not in updates and cfg.solver == "bous":
            if cfg.eps == cfg.mu:
                updates["eps"] = updates["mu"]
        out.append(replace(cfg, sweep={}, **updates))
    return out
