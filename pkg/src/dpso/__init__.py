"""Particle swarm optimization with divergence-gated repulsion.

A numpy library implementing the baseline particle swarm optimizer and a
modulated variant whose velocity update adds a bounded repulsion away from
the global best, gated by a similarity kernel between each particle's
personal best and the global best.  Ships with a 36-function benchmark
suite, a counter-addressed random source for bit-reproducible parallel
experiments, an experiment harness with summary statistics, and CSV/JSON
report writers.
"""

__version__ = "0.1.0"

from .benchmarks import (
    MULTIMODAL,
    UNIMODAL,
    BenchmarkSpec,
    DimensionTooSmallError,
    UnknownFunctionError,
    bounds,
    evaluate,
    get_spec,
    list_functions,
)
from .kernels import (
    GAUSSIAN,
    HELLINGER,
    KERNEL_FAMILIES,
    KL,
    KernelSpec,
    LengthMismatchError,
    NonPositiveBandwidthError,
    gaussian_kernel,
    hellinger_sq_isotropic_gaussians,
    kernel_value,
    kl_isotropic_gaussians,
)
from .rng import (
    R1,
    R2,
    R3,
    BoundsInvertedError,
    DrawAddress,
    InitDim,
    SeedContext,
    move_draws,
    uniform01,
    uniform_box,
)
from .swarm import (
    NonFiniteFitnessError,
    RunRecord,
    SwarmConfig,
    SwarmState,
    initialize,
    modulation_velocity,
    pso_velocity_update,
    repulsion_direction,
    run,
    step,
    velocity_update,
)
from .experiment import (
    ALGORITHMS,
    DPSO,
    PSO,
    EmptyCellError,
    ExperimentError,
    ExperimentPlan,
    MissingPairError,
    SummaryRow,
    build_config,
    load_plan_file,
    overhead_report,
    plan_from_options,
    run_cell,
    run_experiment,
    summarize,
)
from .reports import (
    ReportBundle,
    read_results,
    read_summary,
    write_report_bundle,
    write_results,
    write_summary,
    write_traces,
)
