"""Tests for the addressed Philox draw source."""

import numpy as np
import pytest
from scipy.stats import chisquare

from dpso.rng import (
    R1,
    R2,
    R3,
    BoundsInvertedError,
    DrawAddress,
    InitDim,
    SeedContext,
    move_draws,
    move_draws_per_dimension,
    move_draws_per_dimension_swarm,
    uniform01,
    uniform_box,
)

CTX = SeedContext(master_seed=42, run_index=0)


def addr(iteration=0, particle=0, slot=R1, seed=42, run=0):
    return DrawAddress(seed, run, iteration, particle, slot)


class TestUniform01:
    def test_pure_same_address_same_value(self):
        a = addr(iteration=3, particle=7, slot=R2)
        assert uniform01(a) == uniform01(a)

    def test_range(self):
        for slot in (R1, R2, R3, InitDim(0), InitDim(9)):
            v = uniform01(addr(slot=slot))
            assert 0.0 <= v < 1.0

    def test_slots_differ(self):
        values = {slot: uniform01(addr(slot=slot)) for slot in (R1, R2, R3)}
        assert len(set(values.values())) == 3

    def test_all_address_fields_matter(self):
        base = addr(iteration=5, particle=2, slot=R1)
        v0 = uniform01(base)
        assert uniform01(addr(iteration=6, particle=2)) != v0
        assert uniform01(addr(iteration=5, particle=3)) != v0
        assert uniform01(addr(iteration=5, particle=2, seed=43)) != v0
        assert uniform01(addr(iteration=5, particle=2, run=1)) != v0

    def test_init_dims_distinct(self):
        vals = [uniform01(addr(slot=InitDim(k))) for k in range(16)]
        assert len(set(vals)) == 16

    def test_unknown_slot_rejected(self):
        with pytest.raises(ValueError):
            uniform01(addr(slot=5))

    def test_collision_fraction_over_address_pairs(self):
        # 1e5 pairs of distinct addresses; 53-bit draws should barely collide
        u = move_draws(CTX, 0, 100_000)
        a, b = u[:, 0], u[:, 1]
        assert np.mean(a == b) < 1e-3

    def test_mean_of_enumerated_draws(self):
        u = move_draws(CTX, 0, 350_000)
        sample = u.ravel()[:1_000_000]
        assert abs(sample.mean() - 0.5) < 0.002

    def test_chi_square_uniformity(self):
        u = move_draws(CTX, 0, 350_000).ravel()[:1_000_000]
        counts, _ = np.histogram(u, bins=200, range=(0.0, 1.0))
        result = chisquare(counts)
        assert result.pvalue > 0.01


class TestVectorizedConsistency:
    """The engine's batched draws must equal the scalar addressing."""

    def test_move_draws_match_uniform01(self):
        u = move_draws(CTX, iteration=11, n_particles=6)
        for i in range(6):
            for slot in (R1, R2, R3):
                expected = uniform01(addr(iteration=11, particle=i, slot=slot))
                assert u[i, slot] == expected

    def test_uniform_box_matches_init_slots(self):
        lb = np.full(7, -2.0)
        ub = np.full(7, 3.0)
        x = uniform_box(CTX, particle=4, lb=lb, ub=ub)
        for k in range(7):
            u = uniform01(addr(particle=4, slot=InitDim(k)))
            assert x[k] == lb[k] + u * (ub[k] - lb[k])

    def test_per_dimension_swarm_matches_per_particle(self):
        sw = move_draws_per_dimension_swarm(CTX, 9, n_particles=5, dimension=13)
        single = np.stack(
            [move_draws_per_dimension(CTX, 9, i, 13) for i in range(5)], axis=1
        )
        assert np.array_equal(sw, single)

    def test_families_do_not_alias(self):
        # same (particle, iteration) indices in different families
        scalar = move_draws(CTX, 0, 4)
        perdim = move_draws_per_dimension_swarm(CTX, 0, 4, 3)
        box = uniform_box(CTX, 0, np.zeros(4), np.ones(4))
        assert not np.intersect1d(scalar.ravel(), perdim.ravel()).size
        assert not np.intersect1d(scalar.ravel(), box).size


class TestUniformBox:
    def test_degenerate_box_returns_lb_exactly(self):
        lb = np.array([1.5, -2.0, 0.25])
        x = uniform_box(CTX, 0, lb, lb)
        assert np.array_equal(x, lb)

    def test_values_inside_box(self):
        lb, ub = np.full(50, -1.0), np.full(50, 1.0)
        x = uniform_box(CTX, 3, lb, ub)
        assert np.all(x >= -1.0) and np.all(x < 1.0)

    def test_purity(self):
        lb, ub = np.full(10, -5.0), np.full(10, 5.0)
        a = uniform_box(CTX, 1, lb, ub)
        b = uniform_box(CTX, 1, lb, ub)
        assert np.array_equal(a, b)

    def test_inverted_bounds_rejected(self):
        with pytest.raises(BoundsInvertedError):
            uniform_box(CTX, 0, np.ones(3), np.zeros(3))


class TestStreamSeparation:
    def test_runs_disjoint(self):
        a = move_draws(SeedContext(42, 0), 0, 1000)
        b = move_draws(SeedContext(42, 1), 0, 1000)
        assert not np.intersect1d(a.ravel(), b.ravel()).size

    def test_seeds_disjoint(self):
        a = move_draws(SeedContext(42, 0), 0, 1000)
        b = move_draws(SeedContext(43, 0), 0, 1000)
        assert not np.intersect1d(a.ravel(), b.ravel()).size
