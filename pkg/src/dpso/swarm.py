"""Particle swarm engine with an optional divergence-gated repulsion term.

The baseline update moves each particle under inertia plus stochastic
attraction toward its personal best and the swarm's global best.  The
modulated variant adds a bounded repulsion away from the global best, gated
by a similarity kernel between the particle's personal best and the global
best: particles whose search history has collapsed onto the attractor get
pushed back out, while well-separated particles are left alone.

Updates are synchronous: within one iteration every particle reads the
previous iteration's global best, and the global best is recomputed once
after all particles have moved.  All randomness comes from addressed draws
(see `dpso.rng`), so runs are bit-reproducible for a given seed context.
"""

import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from .kernels import KernelSpec, kernel_value
from .rng import (
    SeedContext,
    move_draws,
    move_draws_per_dimension_swarm,
    uniform_box,
)

__all__ = [
    "SwarmConfig",
    "SwarmState",
    "RunRecord",
    "NonFiniteFitnessError",
    "repulsion_direction",
    "modulation_velocity",
    "pso_velocity_update",
    "velocity_update",
    "initialize",
    "step",
    "run",
]


class NonFiniteFitnessError(RuntimeError):
    """Raised when the objective returns NaN or infinity; the run is aborted."""


@dataclass
class SwarmConfig:
    """All parameters of one optimization run.

    ``modulate`` selects the velocity-update code path: False runs the plain
    baseline update, True evaluates the kernel-gated repulsion term (which
    contributes exactly zero when ``c3 == 0``, reproducing the baseline
    bit-for-bit).  ``omega_schedule``, when set to ``(omega_max, omega_min)``,
    decays the inertia weight linearly over the iteration budget.

    ``per_dimension_draws`` controls the attraction draws r1, r2: fresh per
    coordinate (default) or one scalar per particle per iteration.  The
    repulsion draw r3 is a per-particle scalar either way.
    """

    dimension: int
    lb: np.ndarray
    ub: np.ndarray
    swarm_size: int = 40
    max_iterations: int = 1000
    omega: float = 0.7298
    omega_schedule: Optional[Tuple[float, float]] = None
    c1: float = 1.49618
    c2: float = 1.49618
    c3: float = 1.0
    kernel: Optional[KernelSpec] = None
    epsilon: float = 1e-9
    vmax_fraction: float = 0.2
    seed_context: SeedContext = SeedContext(42, 0)
    modulate: bool = True
    per_dimension_draws: bool = True
    vmax: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        self.lb = np.asarray(self.lb, dtype=np.float64)
        self.ub = np.asarray(self.ub, dtype=np.float64)
        if self.lb.shape != (self.dimension,) or self.ub.shape != (self.dimension,):
            raise ValueError("lb and ub must have shape (dimension,)")
        if not np.all(self.lb < self.ub):
            raise ValueError("bounds must satisfy lb < ub componentwise")
        if self.swarm_size < 2:
            raise ValueError("swarm_size must be at least 2")
        if self.max_iterations < 0:
            raise ValueError("max_iterations must be non-negative")
        if self.c3 < 0:
            raise ValueError("c3 must be non-negative")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if not 0.0 < self.vmax_fraction <= 1.0:
            raise ValueError("vmax_fraction must lie in (0, 1]")
        for coeff in (self.omega, self.c1, self.c2, self.c3):
            if not np.isfinite(coeff):
                raise ValueError("coefficients must be finite")
        if not isinstance(self.seed_context, SeedContext):
            self.seed_context = SeedContext(*self.seed_context)
        if self.kernel is None:
            self.kernel = KernelSpec(sigma=0.1 * float(np.linalg.norm(self.ub - self.lb)))
        self.vmax = self.vmax_fraction * (self.ub - self.lb)

    def omega_at(self, iteration: int) -> float:
        """Inertia weight at an iteration, constant or linearly decayed."""
        if self.omega_schedule is None:
            return self.omega
        omega_max, omega_min = self.omega_schedule
        span = max(self.max_iterations - 1, 1)
        frac = min(iteration, span) / span
        return omega_max - (omega_max - omega_min) * frac


@dataclass
class SwarmState:
    """Mutable per-iteration state of the swarm."""

    positions: np.ndarray
    velocities: np.ndarray
    pbest_positions: np.ndarray
    pbest_fitness: np.ndarray
    gbest_position: np.ndarray
    gbest_fitness: float
    iteration: int = 0
    eval_count: int = 0


@dataclass
class RunRecord:
    """Outcome of one run: final solution, fitness trace, and timing."""

    function: str
    dimension: int
    algorithm: str
    run_index: int
    master_seed: int
    final_fitness: float
    final_position: np.ndarray
    trace: np.ndarray
    wall_seconds: float
    eval_count: int


def repulsion_direction(x, g, epsilon: float):
    """Near-unit vector from the global best toward a position.

    ``(x - g) / (||x - g|| + epsilon)``; the norm is strictly below 1 and the
    zero vector is returned when x == g.  Broadcasts over leading axes.
    """
    d = np.asarray(x, dtype=np.float64) - np.asarray(g, dtype=np.float64)
    norm = np.sqrt(np.sum(d * d, axis=-1))
    return d / (norm + epsilon)[..., None]


def modulation_velocity(pbest, gbest, position, c3, r3, kernel: KernelSpec, epsilon: float):
    """Kernel-gated repulsive velocity component.

    ``c3 * r3 * kernel(pbest, gbest) * direction(position, gbest)``; its norm
    never exceeds ``c3`` since every other factor lies in [0, 1).
    """
    kappa = kernel_value(kernel, pbest, gbest)
    dhat = repulsion_direction(position, gbest, epsilon)
    return np.asarray(c3 * r3 * kappa)[..., None] * dhat


def pso_velocity_update(velocity, position, pbest, gbest, omega, c1, c2, r1, r2, vmax):
    """Baseline velocity update: inertia + cognitive + social, then clamp."""
    v = (
        omega * velocity
        + (c1 * r1) * (pbest - position)
        + (c2 * r2) * (gbest - position)
    )
    return np.clip(v, -vmax, vmax)


def velocity_update(velocity, position, pbest, gbest, omega, c1, c2, r1, r2, vmax, modulation):
    """Modulated velocity update: baseline terms plus repulsion, then clamp."""
    v = (
        omega * velocity
        + (c1 * r1) * (pbest - position)
        + (c2 * r2) * (gbest - position)
    )
    v = v + modulation
    return np.clip(v, -vmax, vmax)


def _check_finite(fitness, iteration):
    if not np.all(np.isfinite(fitness)):
        bad = int(np.flatnonzero(~np.isfinite(fitness))[0])
        raise NonFiniteFitnessError(
            f"objective returned {fitness[bad]!r} for particle {bad} "
            f"at iteration {iteration}"
        )


def initialize(config: SwarmConfig, objective: Callable) -> SwarmState:
    """Build the iteration-0 state: uniform positions, zero velocities.

    Personal bests start at the initial positions and the global best is the
    fittest of them; the objective is evaluated once per particle.
    """
    n, d = config.swarm_size, config.dimension
    positions = np.empty((n, d), dtype=np.float64)
    for i in range(n):
        positions[i] = uniform_box(config.seed_context, i, config.lb, config.ub)
    fitness = np.asarray(objective(positions), dtype=np.float64)
    _check_finite(fitness, 0)
    best = int(np.argmin(fitness))
    return SwarmState(
        positions=positions,
        velocities=np.zeros((n, d), dtype=np.float64),
        pbest_positions=positions.copy(),
        pbest_fitness=fitness.copy(),
        gbest_position=positions[best].copy(),
        gbest_fitness=float(fitness[best]),
        iteration=0,
        eval_count=n,
    )


def step(state: SwarmState, config: SwarmConfig, objective: Callable) -> SwarmState:
    """Advance the swarm one iteration in place and return it.

    Every particle draws r1, r2, r3, updates and clamps its velocity, moves,
    is clipped to the bounds, and is re-evaluated; personal bests improve on
    strictly better fitness only.  The global best is updated once at the
    end, so all particles in this iteration saw the previous global best.
    """
    n = config.swarm_size
    omega = config.omega_at(state.iteration)
    u = move_draws(config.seed_context, state.iteration, n)
    r3 = u[:, 2]
    if config.per_dimension_draws:
        r1, r2 = move_draws_per_dimension_swarm(
            config.seed_context, state.iteration, n, config.dimension
        )
    else:
        r1, r2 = u[:, 0:1], u[:, 1:2]

    if config.modulate:
        vmod = modulation_velocity(
            state.pbest_positions,
            state.gbest_position,
            state.positions,
            config.c3,
            r3,
            config.kernel,
            config.epsilon,
        )
        velocities = velocity_update(
            state.velocities,
            state.positions,
            state.pbest_positions,
            state.gbest_position,
            omega,
            config.c1,
            config.c2,
            r1,
            r2,
            config.vmax,
            vmod,
        )
    else:
        velocities = pso_velocity_update(
            state.velocities,
            state.positions,
            state.pbest_positions,
            state.gbest_position,
            omega,
            config.c1,
            config.c2,
            r1,
            r2,
            config.vmax,
        )

    positions = np.clip(state.positions + velocities, config.lb, config.ub)
    fitness = np.asarray(objective(positions), dtype=np.float64)
    _check_finite(fitness, state.iteration + 1)

    improved = fitness < state.pbest_fitness
    state.pbest_positions[improved] = positions[improved]
    state.pbest_fitness[improved] = fitness[improved]

    best = int(np.argmin(state.pbest_fitness))
    if state.pbest_fitness[best] < state.gbest_fitness:
        state.gbest_position = state.pbest_positions[best].copy()
        state.gbest_fitness = float(state.pbest_fitness[best])

    state.positions = positions
    state.velocities = velocities
    state.iteration += 1
    state.eval_count += n
    return state


def run(config: SwarmConfig, objective: Callable, function: str = "", algorithm: str = "") -> RunRecord:
    """Execute a full run and return its record.

    The fitness trace has length ``max_iterations + 1`` (the leading entry is
    the post-initialization global best) and is non-increasing.  Wall time
    covers initialization and the iteration loop, not record assembly.
    """
    t0 = time.perf_counter()
    state = initialize(config, objective)
    trace = np.empty(config.max_iterations + 1, dtype=np.float64)
    trace[0] = state.gbest_fitness
    for t in range(config.max_iterations):
        step(state, config, objective)
        trace[t + 1] = state.gbest_fitness
    wall = time.perf_counter() - t0
    return RunRecord(
        function=function,
        dimension=config.dimension,
        algorithm=algorithm,
        run_index=config.seed_context.run_index,
        master_seed=config.seed_context.master_seed,
        final_fitness=float(state.gbest_fitness),
        final_position=state.gbest_position.copy(),
        trace=trace,
        wall_seconds=wall,
        eval_count=state.eval_count,
    )
