"""Coupled wave-structure simulation on a periodic 1-d domain.

Two nondimensional long-wave models of a fluid layer over a rigid solid
that slides along the bottom under wave-induced pressure forces and
regularized Coulomb friction:

* a nonlinear shallow-water (hyperbolic) system, and
* a weakly nonlinear dispersive system with an elliptic factor on the
  velocity equation,

each coupled to the solid's Newton ODE through a moving-bottom source and
hydrostatic pressure closures.  The package adds the energy and
solid-velocity diagnostics used to monitor the runs, a fixed-point
reference solver for verification, and a CLI for runs, sweeps, and the
acceptance suite.
"""

__version__ = "0.1.0"

from .bathymetry import Bathymetry, bump, eval_b, integrate_over_support
from .core import FluidState, Grid1D, Parameters, SolidState, depth
from .solid import (
    ClosureKind,
    SolidConstants,
    added_mass_matrix,
    friction_factor,
    friction_rate_bound,
    solid_constants,
    solid_rhs_bous,
    solid_rhs_sv,
    step_solid,
)
from .saint_venant import QuasilinearForm, assemble_quasilinear, step_sv, sv_fluid_rhs
from .boussinesq import DispersiveOperator, bous_fluid_rhs, helmholtz_solve, step_bous
from .picard import PicardConfig, PicardResult, picard_iterate
from .diagnostics import (
    EnergyReport,
    check_velocity_bound,
    energy_eb,
    fit_growth_rate,
    pressure_consistency_probe,
    sobolev_norm,
    xs_norm,
)
from .config import RunConfig, expand_sweep, initial_state, load_config
from . import errors

__all__ = [
    "__version__",
    "Bathymetry", "bump", "eval_b", "integrate_over_support",
    "FluidState", "Grid1D", "Parameters", "SolidState", "depth",
    "ClosureKind", "SolidConstants", "added_mass_matrix", "friction_factor",
    "friction_rate_bound", "solid_constants", "solid_rhs_bous", "solid_rhs_sv",
    "step_solid",
    "QuasilinearForm", "assemble_quasilinear", "step_sv", "sv_fluid_rhs",
    "DispersiveOperator", "bous_fluid_rhs", "helmholtz_solve", "step_bous",
    "PicardConfig", "PicardResult", "picard_iterate",
    "EnergyReport", "check_velocity_bound", "energy_eb", "fit_growth_rate",
    "pressure_consistency_probe", "sobolev_norm", "xs_norm",
    "RunConfig", "expand_sweep", "initial_state", "load_config",
    "errors",
]
