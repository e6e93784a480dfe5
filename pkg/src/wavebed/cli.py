"""Command-line interface: single runs, parameter sweeps, verification.

    wavebed run    --config cfg.yaml [--out DIR] [--seedless]
    wavebed sweep  --config cfg.yaml [--out DIR] [--workers N]
    wavebed verify {lake-at-rest,dispersion,picard,energy,velocity-bound,
                    convergence,all} [--tol TOL] [--horizon T]

``verify`` exits nonzero when any selected criterion fails.  The --tol and
--horizon flags apply to the fixed-point (picard) check only.
"""

from __future__ import annotations

import argparse
import sys

from .config import load_config
from .errors import WavebedError
from .verification import GROUPS, run_criteria

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavebed",
        description="coupled wave-structure simulations on a periodic 1-d box",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a single configured run")
    p_run.add_argument("--config", required=True, help="YAML run config")
    p_run.add_argument("--out", default=None, help="output directory")
    p_run.add_argument(
        "--seedless", action="store_true",
        help="assert that no randomness is used (recorded in the manifest)",
    )

    p_sweep = sub.add_parser("sweep", help="expand and run the sweep block")
    p_sweep.add_argument("--config", required=True, help="YAML run config")
    p_sweep.add_argument("--out", default=None, help="output directory")
    p_sweep.add_argument("--workers", type=int, default=1,
                         help="size of the worker pool")

    p_verify = sub.add_parser("verify", help="run acceptance criteria")
    p_verify.add_argument("group", choices=sorted(GROUPS),
                          help="criterion group to run")
    p_verify.add_argument("--tol", type=float, default=None,
                          help="fixed-point tolerance (picard group)")
    p_verify.add_argument("--horizon", type=float, default=None,
                          help="fixed-point horizon (picard group)")
    return parser


def _cmd_run(args) -> int:
    from .runner import run

    cfg = load_config(args.config)
    result = run(cfg, outdir=args.out, seedless=args.seedless)
    print(f"run completed: {result.outdir} "
          f"(wall {result.manifest['wall_time_s']:.2f}s)")
    return result.status


def _cmd_sweep(args) -> int:
    from .runner import run_sweep

    cfg = load_config(args.config)
    results = run_sweep(cfg, outdir=args.out, workers=args.workers)
    bad = sum(1 for r in results if r.status != 0)
    print(f"sweep completed: {len(results)} runs, {bad} failed")
    return 1 if bad else 0


def _cmd_verify(args) -> int:
    overrides = {}
    if args.group == "picard" and (args.tol or args.horizon):
        from . import verification as _v

        kwargs = {}
        if args.tol:
            kwargs["tol"] = args.tol
        if args.horizon:
            kwargs["horizon"] = args.horizon
        overrides[5] = lambda: _v.criterion_5_picard(**kwargs)
    results = run_criteria(GROUPS[args.group], overrides=overrides)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_verify(args)
    except WavebedError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
