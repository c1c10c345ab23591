"""Addressed uniform random draws built on the Philox counter-based generator.

Every random scalar the optimizer consumes is identified by a draw address
(master seed, run index, iteration, particle, slot) and is computed directly
from one Philox-4x64 block keyed by ``(master_seed, run_index)``.  Because a
draw is a pure function of its address, results are reproducible regardless
of evaluation order, vectorization, or how many workers execute the runs.

Address layout (256-bit Philox counter, four 64-bit words)::

    move draws  (slots R1/R2/R3):  [particle, iteration, 0,         FAMILY_MOVE]
    init draws  (slot InitDim(k)): [k // 4,   particle,  iteration, FAMILY_INIT]

The three move draws of one particle live in the words 0..2 of a single
block, so a vectorized request for a whole swarm consumes consecutive
counters and reproduces the scalar addressing exactly.
"""

from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np
from numpy.random import Philox

__all__ = [
    "R1",
    "R2",
    "R3",
    "InitDim",
    "SeedContext",
    "DrawAddress",
    "BoundsInvertedError",
    "uniform01",
    "uniform_box",
    "move_draws",
    "move_draws_per_dimension",
    "move_draws_per_dimension_swarm",
]

# Slot indices for the three per-particle draws of one iteration.  They are
# also the word index inside that particle's Philox block.
R1 = 0
R2 = 1
R3 = 2

_FAMILY_MOVE = 0
_FAMILY_INIT = 1
_FAMILY_MOVE_DIM = 2

# Conversion used for uint64 -> float64 in [0, 1): keep the top 53 bits.
_INV_2_53 = 1.0 / 9007199254740992.0


class InitDim(NamedTuple):
    """Slot for the k-th coordinate of a particle's initial position."""

    dim: int


class SeedContext(NamedTuple):
    """The (master_seed, run_index) prefix shared by all draws of one run."""

    master_seed: int
    run_index: int


Slot = Union[int, InitDim]


@dataclass(frozen=True)
class DrawAddress:
    """Fully qualified address of a single uniform draw."""

    master_seed: int
    run_index: int
    iteration: int
    particle: int
    slot: Slot


class BoundsInvertedError(ValueError):
    """Raised when a lower bound exceeds the matching upper bound."""


def _to_unit(raw):
    """Map raw uint64 words to float64 in [0, 1)."""
    return (raw >> np.uint64(11)) * _INV_2_53


def _raw(key, counter, n_words):
    return Philox(counter=counter, key=key).random_raw(n_words)


def uniform01(addr: DrawAddress) -> float:
    """Return the uniform [0, 1) value at a draw address.

    Pure: identical addresses always yield the identical value, across
    program runs, platforms, and worker counts.
    """
    key = [addr.master_seed, addr.run_index]
    slot = addr.slot
    if isinstance(slot, InitDim):
        k = slot.dim
        counter = [k // 4, addr.particle, addr.iteration, _FAMILY_INIT]
        word = k % 4
    else:
        if slot not in (R1, R2, R3):
            raise ValueError(f"unknown draw slot: {slot!r}")
        counter = [addr.particle, addr.iteration, 0, _FAMILY_MOVE]
        word = slot
    block = _raw(key, counter, 4)
    return float(_to_unit(block[word]))


def uniform_box(ctx: SeedContext, particle: int, lb, ub, iteration: int = 0) -> np.ndarray:
    """Draw one point uniformly from the box [lb, ub].

    Component k uses the draw at slot ``InitDim(k)``, so the returned vector
    is bit-identical to assembling the components from `uniform01` calls.
    """
    lb = np.asarray(lb, dtype=np.float64)
    ub = np.asarray(ub, dtype=np.float64)
    if np.any(lb > ub):
        raise BoundsInvertedError("lower bound exceeds upper bound")
    n = lb.shape[-1]
    n_blocks = -(-n // 4)
    counter = [0, particle, iteration, _FAMILY_INIT]
    raw = _raw([ctx.master_seed, ctx.run_index], counter, 4 * n_blocks)
    u = _to_unit(raw[:n])
    return lb + u * (ub - lb)


def move_draws(ctx: SeedContext, iteration: int, n_particles: int) -> np.ndarray:
    """Return the (n_particles, 3) matrix of r1, r2, r3 draws for one iteration.

    Row i holds the slots R1, R2, R3 of particle i; each value equals the
    corresponding scalar `uniform01` result.
    """
    counter = [0, iteration, 0, _FAMILY_MOVE]
    raw = _raw([ctx.master_seed, ctx.run_index], counter, 4 * n_particles)
    return _to_unit(raw.reshape(n_particles, 4)[:, :3])


def move_draws_per_dimension(
    ctx: SeedContext, iteration: int, particle: int, dimension: int
) -> np.ndarray:
    """Return a (2, dimension) matrix of per-coordinate r1, r2 draws.

    Coordinate k of particle i occupies counter block ``i * dimension + k``
    (words 0 and 1), so the whole swarm's draws form one contiguous counter
    range per iteration.  Only the attraction draws are per-coordinate; the
    repulsion draw r3 stays a scalar per particle (slot R3) because it
    scales a direction vector.
    """
    counter = [particle * dimension, iteration, 0, _FAMILY_MOVE_DIM]
    raw = _raw([ctx.master_seed, ctx.run_index], counter, 4 * dimension)
    return _to_unit(raw.reshape(dimension, 4)[:, :2].T)


def move_draws_per_dimension_swarm(
    ctx: SeedContext, iteration: int, n_particles: int, dimension: int
) -> np.ndarray:
    """Per-coordinate r1, r2 draws for the whole swarm, shape (2, N, dimension).

    Bit-identical to stacking `move_draws_per_dimension` over particles.
    """
    counter = [0, iteration, 0, _FAMILY_MOVE_DIM]
    raw = _raw([ctx.master_seed, ctx.run_index], counter, 4 * n_particles * dimension)
    blocks = raw.reshape(n_particles, dimension, 4)
    return np.stack((_to_unit(blocks[..., 0]), _to_unit(blocks[..., 1])))
