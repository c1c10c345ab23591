"""Experiment harness: seeded sweeps over functions, dimensions, and algorithms.

A plan names the benchmark functions, dimensions, algorithms, and run count;
executing it produces one record per (function, dimension, algorithm, run)
cell entry.  The baseline and modulated algorithms reuse the same addressed
draw streams for every slot they share, so a pair of cells differing only in
the algorithm isolates the effect of the repulsion term.  Aggregation yields
per-cell summary statistics (mean, standard deviation, median, interquartile
range, mean wall time) plus a wall-clock overhead report.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .benchmarks import get_spec, list_functions
from .kernels import KERNEL_FAMILIES, KernelSpec
from .rng import SeedContext
from .swarm import RunRecord, SwarmConfig, run

__all__ = [
    "PSO",
    "DPSO",
    "ALGORITHMS",
    "ExperimentPlan",
    "SummaryRow",
    "ExperimentError",
    "EmptyCellError",
    "MissingPairError",
    "build_config",
    "run_cell",
    "run_experiment",
    "summarize",
    "overhead_report",
    "load_plan_file",
    "plan_from_options",
]

PSO = "pso"
DPSO = "dpso"
ALGORITHMS = (PSO, DPSO)


class ExperimentError(RuntimeError):
    """A cell failed; carries the completed records and failure contexts."""

    def __init__(self, message, records=None, failures=None):
        super().__init__(message)
        self.records = records or []
        self.failures = failures or []


class EmptyCellError(ValueError):
    """Raised when asked to summarize an empty record set."""


class MissingPairError(ValueError):
    """Raised when an overhead ratio lacks one of its two algorithms."""


@dataclass
class ExperimentPlan:
    """What to run and with which swarm parameters."""

    functions: List[str] = field(default_factory=list_functions)
    dimensions: Sequence[int] = (10, 30, 50)
    algorithms: Sequence[str] = ALGORITHMS
    runs: int = 30
    master_seed: int = 42
    swarm_size: int = 40
    max_iterations: int = 1000
    omega: float = 0.7298
    omega_schedule: Optional[Tuple[float, float]] = None
    c1: float = 1.49618
    c2: float = 1.49618
    c3: float = 1.0
    kernel_family: str = "gaussian"
    beta: float = 0.1
    alpha: float = 1.0
    vmax_fraction: float = 0.2
    epsilon: float = 1e-9

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        for name in self.functions:
            get_spec(name)  # raises UnknownFunctionError
        for alg in self.algorithms:
            if alg not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {alg!r}")
        if self.kernel_family not in KERNEL_FAMILIES:
            raise ValueError(f"unknown kernel family {self.kernel_family!r}")
        if not self.beta > 0:
            raise ValueError("beta must be positive")

    def cells(self):
        """Canonically ordered (function, dimension, algorithm) triples."""
        return sorted(
            (f, d, a)
            for f in self.functions
            for d in self.dimensions
            for a in self.algorithms
        )


def build_config(plan: ExperimentPlan, function: str, dimension: int,
                 algorithm: str, run_index: int) -> SwarmConfig:
    """Concrete swarm configuration for one cell entry.

    The kernel bandwidth scales with the search-space diagonal
    (``sigma = beta * ||ub - lb||``); the baseline algorithm runs with the
    repulsion path disabled and zero modulation strength.
    """
    from .benchmarks import bounds

    lb, ub = bounds(function, dimension)
    sigma = plan.beta * float(np.linalg.norm(ub - lb))
    kernel = KernelSpec(family=plan.kernel_family, sigma=sigma, alpha=plan.alpha)
    is_dpso = algorithm == DPSO
    return SwarmConfig(
        dimension=dimension,
        lb=lb,
        ub=ub,
        swarm_size=plan.swarm_size,
        max_iterations=plan.max_iterations,
        omega=plan.omega,
        omega_schedule=plan.omega_schedule,
        c1=plan.c1,
        c2=plan.c2,
        c3=plan.c3 if is_dpso else 0.0,
        kernel=kernel,
        epsilon=plan.epsilon,
        vmax_fraction=plan.vmax_fraction,
        seed_context=SeedContext(plan.master_seed, run_index),
        modulate=is_dpso,
    )


def run_cell(plan: ExperimentPlan, function: str, dimension: int, algorithm: str,
             timed: bool = True) -> List[RunRecord]:
    """Execute all runs of one cell, preceded by one untimed warm-up run.

    The warm-up removes one-time setup costs from the timed measurements and
    is skipped entirely when ``timed`` is False, in which case every record's
    wall time is reported as 0.0 so outputs are byte-reproducible.
    """
    objective = get_spec(function).evaluator
    if timed:
        run(build_config(plan, function, dimension, algorithm, 0), objective)
    records = []
    for r in range(plan.runs):
        config = build_config(plan, function, dimension, algorithm, r)
        try:
            record = run(config, objective, function=function, algorithm=algorithm)
        except Exception as exc:
            raise ExperimentError(
                f"{function} D={dimension} {algorithm} run {r}: {exc}"
            ) from exc
        if not timed:
            record.wall_seconds = 0.0
        records.append(record)
    return records


def _cell_task(args):
    plan, function, dimension, algorithm, timed = args
    return run_cell(plan, function, dimension, algorithm, timed)


def run_experiment(plan: ExperimentPlan, workers: int = 1, timed: bool = True,
                   keep_going: bool = False, progress=None) -> List[RunRecord]:
    """Run every cell of a plan and return records in canonical order.

    Cells are independent and may execute in parallel (``workers`` > 1);
    results are identical for any worker count since all draws are
    addressed.  With ``keep_going``, cell failures are collected and an
    `ExperimentError` carrying the completed records is raised at the end;
    otherwise the first failure propagates immediately.
    """
    cells = plan.cells()
    tasks = [(plan, f, d, a, timed) for (f, d, a) in cells]
    records: List[RunRecord] = []
    failures = []

    def handle(cell, outcome):
        try:
            records.extend(outcome())
        except ExperimentError as exc:
            if not keep_going:
                raise
            failures.append((cell, str(exc)))
        if progress is not None:
            progress(cell)

    if workers <= 1:
        for cell, task in zip(cells, tasks):
            handle(cell, lambda task=task: _cell_task(task))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_cell_task, task) for task in tasks]
            for cell, fut in zip(cells, futures):
                handle(cell, fut.result)

    records.sort(key=lambda r: (r.function, r.dimension, r.algorithm, r.run_index))
    if failures:
        raise ExperimentError(
            f"{len(failures)} cell(s) failed", records=records, failures=failures
        )
    return records


@dataclass
class SummaryRow:
    """Final-fitness statistics of one (function, dimension, algorithm) cell."""

    function: str
    dimension: int
    algorithm: str
    mean: float
    std: float
    median: float
    iqr_low: float
    iqr_high: float
    mean_wall_seconds: float
    winner_flag: bool = False
    mw_pvalue: Optional[float] = None


def _mannwhitney_pvalue(a, b):
    # extension beyond the summary statistics; not part of the core protocol
    from scipy.stats import mannwhitneyu

    if np.all(a == a[0]) and np.all(b == b[0]) and a[0] == b[0]:
        return 1.0
    return float(mannwhitneyu(a, b, alternative="two-sided").pvalue)


def summarize(records: Sequence[RunRecord], with_pvalues: bool = False) -> List[SummaryRow]:
    """Aggregate records into per-cell statistics with winner flags.

    Standard deviation uses the n-1 divisor (0.0 for a single run); the
    median and the 25th/75th percentiles use linear interpolation.  Within
    each (function, dimension) pair the algorithm with the strictly lower
    mean gets ``winner_flag``; exact ties leave both unflagged.  Optionally
    attaches a two-sided Mann-Whitney U p-value to both rows of a pair.
    """
    if not records:
        raise EmptyCellError("no records to summarize")
    groups = {}
    for rec in records:
        groups.setdefault((rec.function, rec.dimension, rec.algorithm), []).append(rec)
    sizes = {len(g) for g in groups.values()}
    if len(sizes) != 1:
        raise ValueError(f"unequal run counts per cell: {sorted(sizes)}")

    rows = {}
    for (function, dimension, algorithm), recs in sorted(groups.items()):
        # canonical in-group order makes the statistics independent of the
        # order records arrive in
        recs.sort(key=lambda r: r.run_index)
        values = np.array([r.final_fitness for r in recs], dtype=np.float64)
        walls = np.array([r.wall_seconds for r in recs], dtype=np.float64)
        std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
        rows[(function, dimension, algorithm)] = SummaryRow(
            function=function,
            dimension=dimension,
            algorithm=algorithm,
            mean=float(np.mean(values)),
            std=std,
            median=float(np.median(values)),
            iqr_low=float(np.percentile(values, 25)),
            iqr_high=float(np.percentile(values, 75)),
            mean_wall_seconds=float(np.mean(walls)),
        )

    pairs = {}
    for key in rows:
        pairs.setdefault((key[0], key[1]), []).append(key)
    for (function, dimension), keys in pairs.items():
        if len(keys) == 2:
            a, b = (rows[k] for k in sorted(keys))
            if a.mean < b.mean:
                a.winner_flag = True
            elif b.mean < a.mean:
                b.winner_flag = True
            if with_pvalues:
                va = np.array([r.final_fitness for r in groups[sorted(keys)[0]]])
                vb = np.array([r.final_fitness for r in groups[sorted(keys)[1]]])
                p = _mannwhitney_pvalue(va, vb)
                a.mw_pvalue = p
                b.mw_pvalue = p
    return [rows[k] for k in sorted(rows)]


def overhead_report(summary: Sequence[SummaryRow]) -> List[Tuple[str, int, float]]:
    """Per (function, dimension) wall-time ratio of modulated over baseline."""
    cells = {}
    for row in summary:
        cells.setdefault((row.function, row.dimension), {})[row.algorithm] = row
    report = []
    for (function, dimension), algs in sorted(cells.items()):
        if PSO not in algs or DPSO not in algs:
            raise MissingPairError(
                f"{function} D={dimension}: need both algorithms for an overhead ratio"
            )
        ratio = algs[DPSO].mean_wall_seconds / algs[PSO].mean_wall_seconds
        report.append((function, dimension, ratio))
    return report


# ---------------------------------------------------------------------------
# plan file support: plain "key = value" lines
# ---------------------------------------------------------------------------

_LIST_KEYS = {"functions", "dimensions", "algorithms"}
_INT_KEYS = {"runs", "seed", "iterations", "swarm_size"}
_FLOAT_KEYS = {"beta", "alpha", "c1", "c2", "c3", "omega", "vmax_fraction", "epsilon"}
_STR_KEYS = {"kernel"}


def load_plan_file(path) -> dict:
    """Parse a plan file of ``key = value`` lines into an option mapping.

    Lists are comma-separated; blank lines and ``#`` comments are ignored.
    """
    options = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in text.split("=", 1))
            if key in _LIST_KEYS:
                items = [item.strip() for item in value.split(",") if item.strip()]
                options[key] = [int(v) for v in items] if key == "dimensions" else items
            elif key in _INT_KEYS:
                options[key] = int(value)
            elif key in _FLOAT_KEYS:
                options[key] = float(value)
            elif key in _STR_KEYS:
                options[key] = value
            else:
                raise ValueError(f"{path}:{lineno}: unknown plan key {key!r}")
    return options


def plan_from_options(options: dict) -> ExperimentPlan:
    """Build a plan from option-mapping keys as used by plan files and the CLI."""
    rename = {
        "seed": "master_seed",
        "iterations": "max_iterations",
        "kernel": "kernel_family",
    }
    kwargs = {}
    for key, value in options.items():
        if value is None:
            continue
        kwargs[rename.get(key, key)] = value
    return ExperimentPlan(**kwargs)
