"""Command-line interface: function listings, single runs, and experiments.

Data goes to files and the result digest to standard output; progress lines
go to standard error.  Exit codes: 0 on success, 1 on a runtime failure,
2 on a usage error.
"""

import argparse
import sys
from dataclasses import asdict

import numpy as np

from . import __version__
from .benchmarks import (
    MULTIMODAL,
    UNIMODAL,
    UnknownFunctionError,
    get_spec,
    list_functions,
)
from .experiment import (
    ALGORITHMS,
    DPSO,
    ExperimentError,
    ExperimentPlan,
    build_config,
    load_plan_file,
    overhead_report,
    plan_from_options,
    run_experiment,
    summarize,
)
from .kernels import KERNEL_FAMILIES
from .reports import write_report_bundle, write_traces
from .swarm import run as run_swarm

__all__ = ["main"]

_SWARM_DEFAULTS = {
    "seed": 42,
    "c3": 1.0,
    "beta": 0.1,
    "alpha": 1.0,
    "kernel": "gaussian",
    "omega": 0.7298,
    "c1": 1.49618,
    "c2": 1.49618,
    "vmax_fraction": 0.2,
    "iterations": 1000,
    "swarm_size": 40,
}


def _csv_strings(text):
    return [item.strip() for item in text.split(",") if item.strip()]


def _csv_ints(text):
    return [int(item) for item in _csv_strings(text)]


def _add_swarm_flags(parser, concrete=True):
    """Add the shared swarm parameter flags.

    With ``concrete=False`` the argparse default is None so that explicitly
    passed flags can be distinguished from omitted ones (for plan-file
    merging); the documented and effective defaults are identical either way.
    """

    def dflt(key):
        return _SWARM_DEFAULTS[key] if concrete else None

    parser.add_argument("--seed", type=int, default=dflt("seed"),
                        help="master seed (default: 42)")
    parser.add_argument("--c3", type=float, default=dflt("c3"),
                        help="repulsion strength; 0 disables it (default: 1.0)")
    parser.add_argument("--beta", type=float, default=dflt("beta"),
                        help="kernel bandwidth as a fraction of the bound diagonal (default: 0.1)")
    parser.add_argument("--alpha", type=float, default=dflt("alpha"),
                        help="divergence-kernel decay rate (default: 1.0)")
    parser.add_argument("--kernel", choices=KERNEL_FAMILIES, default=dflt("kernel"),
                        help="similarity kernel family (default: gaussian)")
    parser.add_argument("--omega", type=float, default=dflt("omega"),
                        help="inertia weight (default: 0.7298)")
    parser.add_argument("--c1", type=float, default=dflt("c1"),
                        help="cognitive coefficient (default: 1.49618)")
    parser.add_argument("--c2", type=float, default=dflt("c2"),
                        help="social coefficient (default: 1.49618)")
    parser.add_argument("--vmax-fraction", type=float, default=dflt("vmax_fraction"),
                        help="velocity clamp as a fraction of the bound range (default: 0.2)")
    parser.add_argument("--iterations", type=int, default=dflt("iterations"),
                        help="iteration budget per run (default: 1000)")
    parser.add_argument("--swarm-size", type=int, default=dflt("swarm_size"),
                        help="number of particles (default: 40)")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="dpso",
        description="Particle swarm optimization with divergence-gated repulsion.",
    )
    parser.add_argument("--version", action="version", version=f"dpso {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list benchmark functions")
    p_list.add_argument("--modality", choices=(UNIMODAL, MULTIMODAL), default=None)
    p_list.set_defaults(handler=cmd_list)

    p_run = sub.add_parser("run", help="run one optimization")
    p_run.add_argument("--function", required=True, help="benchmark function identifier")
    p_run.add_argument("--dimension", "--dim", type=int, required=True, dest="dimension")
    p_run.add_argument("--algorithm", choices=ALGORITHMS, default=DPSO,
                       help="baseline pso or modulated dpso (default: dpso)")
    p_run.add_argument("--run-index", type=int, default=0,
                       help="run stream index under the master seed (default: 0)")
    p_run.add_argument("--trace", default=None, metavar="PATH",
                       help="write the convergence trace CSV here")
    p_run.add_argument("--trace-stride", type=int, default=10,
                       help="trace subsampling stride (default: 10)")
    _add_swarm_flags(p_run)
    p_run.set_defaults(handler=cmd_run)

    p_exp = sub.add_parser("experiment", help="run a full experiment grid")
    p_exp.add_argument("--functions", type=_csv_strings, default=None,
                       help="comma-separated identifiers (default: all 36)")
    p_exp.add_argument("--modality", choices=(UNIMODAL, MULTIMODAL), default=None,
                       help="restrict the default function set to one modality")
    p_exp.add_argument("--dimensions", type=_csv_ints, default=None,
                       help="comma-separated dimensions (default: 10,30,50)")
    p_exp.add_argument("--algorithms", type=_csv_strings, default=None,
                       help="comma-separated algorithms (default: pso,dpso)")
    p_exp.add_argument("--runs", type=int, default=None,
                       help="runs per cell (default: 30)")
    p_exp.add_argument("--workers", type=int, default=1,
                       help="parallel cell workers; results are worker-count independent (default: 1)")
    p_exp.add_argument("--out-dir", default="results",
                       help="output directory for results/traces/summary (default: results)")
    p_exp.add_argument("--trace-stride", type=int, default=10,
                       help="trace subsampling stride (default: 10)")
    p_exp.add_argument("--plan-file", default=None,
                       help="key = value plan file; command-line flags override it")
    p_exp.add_argument("--pvalues", action="store_true",
                       help="add Mann-Whitney U p-values to the summary")
    p_exp.add_argument("--untimed", action="store_true",
                       help="skip wall-time measurement for byte-reproducible outputs")
    _add_swarm_flags(p_exp, concrete=False)
    p_exp.set_defaults(handler=cmd_experiment)
    return parser


def cmd_list(parser, args) -> int:
    for name in list_functions(args.modality):
        spec = get_spec(name)
        print(f"{name:18s} {spec.modality:10s} [{spec.lower_bound:g}, {spec.upper_bound:g}]")
    return 0


def cmd_run(parser, args) -> int:
    try:
        plan = ExperimentPlan(
            functions=[args.function],
            dimensions=[args.dimension],
            algorithms=[args.algorithm],
            runs=1,
            master_seed=args.seed,
            swarm_size=args.swarm_size,
            max_iterations=args.iterations,
            omega=args.omega,
            c1=args.c1,
            c2=args.c2,
            c3=args.c3,
            kernel_family=args.kernel,
            beta=args.beta,
            alpha=args.alpha,
            vmax_fraction=args.vmax_fraction,
        )
        config = build_config(plan, args.function, args.dimension, args.algorithm,
                              args.run_index)
    except (UnknownFunctionError, ValueError) as exc:
        parser.error(str(exc))
    try:
        objective = get_spec(args.function).evaluator
        record = run_swarm(config, objective, function=args.function,
                           algorithm=args.algorithm)
        if args.trace:
            write_traces([record], args.trace, stride=args.trace_stride)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"function={record.function} dimension={record.dimension} "
          f"algorithm={record.algorithm} seed={args.seed} run_index={record.run_index}")
    print(f"final_fitness={record.final_fitness!r}")
    print(f"wall_seconds={record.wall_seconds:.6f}")
    return 0


def _winner_digest(summary):
    wins = {UNIMODAL: {alg: 0 for alg in ALGORITHMS},
            MULTIMODAL: {alg: 0 for alg in ALGORITHMS}}
    ties = {UNIMODAL: 0, MULTIMODAL: 0}
    cells = {}
    for row in summary:
        cells.setdefault((row.function, row.dimension), []).append(row)
    for (function, _dimension), rows in cells.items():
        if len(rows) != 2:
            continue
        modality = get_spec(function).modality
        flagged = [r for r in rows if r.winner_flag]
        if flagged:
            wins[modality][flagged[0].algorithm] += 1
        else:
            ties[modality] += 1
    return wins, ties


def cmd_experiment(parser, args) -> int:
    options = {}
    if args.plan_file:
        try:
            options.update(load_plan_file(args.plan_file))
        except (OSError, ValueError) as exc:
            parser.error(str(exc))

    for name in ("dimensions", "algorithms", "runs", "seed", "swarm_size",
                 "iterations", "omega", "c1", "c2", "c3", "kernel", "beta",
                 "alpha", "vmax_fraction"):
        value = getattr(args, name)
        if value is not None:
            options[name] = value
    if args.functions is not None:
        options["functions"] = args.functions
    elif "functions" not in options and args.modality is not None:
        options["functions"] = list_functions(args.modality)

    try:
        plan = plan_from_options(options)
    except (UnknownFunctionError, ValueError, TypeError) as exc:
        parser.error(str(exc))

    total = len(plan.cells())
    done = [0]

    def progress(cell):
        done[0] += 1
        function, dimension, algorithm = cell
        print(f"[{done[0]}/{total}] {function} D={dimension} {algorithm}",
              file=sys.stderr, flush=True)

    failures = []
    try:
        records = run_experiment(plan, workers=args.workers,
                                 timed=not args.untimed, keep_going=True,
                                 progress=progress)
    except ExperimentError as exc:
        records = exc.records
        failures = exc.failures

    exit_code = 0
    if failures:
        for _cell, message in failures:
            print(f"failed: {message}", file=sys.stderr)
        exit_code = 1

    if records:
        summary = summarize(records, with_pvalues=args.pvalues)
        metadata = {
            "tool": "dpso",
            "version": __version__,
            "master_seed": plan.master_seed,
            "plan": asdict(plan),
        }
        bundle = write_report_bundle(records, summary, args.out_dir,
                                     trace_stride=args.trace_stride,
                                     metadata=metadata)
        print(f"wrote {bundle.results_csv_path}, {bundle.traces_csv_path}, "
              f"{bundle.summary_json_path}", file=sys.stderr)
        wins, ties = _winner_digest(summary)
        for modality in (UNIMODAL, MULTIMODAL):
            counts = wins[modality]
            if sum(counts.values()) + ties[modality] == 0:
                continue
            parts = " ".join(f"{alg}={counts[alg]}" for alg in ALGORITHMS)
            tie_part = f" ties={ties[modality]}" if ties[modality] else ""
            print(f"{modality}: {parts}{tie_part}")
        if not args.untimed:
            try:
                ratios = [ratio for (_f, _d, ratio) in overhead_report(summary)]
            except ValueError:
                ratios = []
            if ratios:
                print(f"mean overhead ratio: {np.mean(ratios):.3f}")
    return exit_code


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.handler(parser, args)


if __name__ == "__main__":
    sys.exit(main())
