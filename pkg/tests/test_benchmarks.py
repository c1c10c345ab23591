"""Tests for the benchmark function registry.

The reference implementations below are independent scalar loops written
straight from the published formulas; the vectorized evaluators must agree
with them on random points.
"""

import math

import numpy as np
import pytest

from dpso.benchmarks import (
    MULTIMODAL,
    UNIMODAL,
    DimensionTooSmallError,
    UnknownFunctionError,
    bounds,
    evaluate,
    get_spec,
    list_functions,
)

ALL_NAMES = list_functions()


# ---------------------------------------------------------------------------
# independent scalar-loop references
# ---------------------------------------------------------------------------

def ref_bohachevsky(x):
    total = 0.0
    for i in range(len(x) - 1):
        total += (
            x[i] ** 2
            + 2.0 * x[i + 1] ** 2
            - 0.3 * math.cos(3.0 * math.pi * x[i])
            - 0.4 * math.cos(4.0 * math.pi * x[i + 1])
            + 0.7
        )
    return total


def ref_pathological(x):
    total = 0.0
    for i in range(len(x) - 1):
        num = math.sin(math.sqrt(100.0 * x[i] ** 2 + x[i + 1] ** 2)) ** 2 - 0.5
        den = 1.0 + 0.001 * (x[i] - x[i + 1]) ** 4
        total += 0.5 + num / den
    return total


def ref_schafferf6(x):
    total = 0.0
    for i in range(len(x) - 1):
        s = x[i] ** 2 + x[i + 1] ** 2
        num = math.sin(math.sqrt(s)) ** 2 - 0.5
        den = (1.0 + 0.001 * s) ** 2
        total += 0.5 + num / den
    return total


def ref_stretchedv(x):
    total = 0.0
    for i in range(len(x) - 1):
        t = x[i] ** 2 + x[i + 1] ** 2
        total += t ** 0.25 * (math.sin(50.0 * t ** 0.1) ** 2 + 0.1)
    return total


def ref_whitley(x):
    total = 0.0
    for i in range(len(x)):
        for j in range(len(x)):
            y = 100.0 * (x[i] ** 2 - x[j]) ** 2 + (1.0 - x[j]) ** 2
            total += y * y / 4000.0 - math.cos(y) + 1.0
    return total


def ref_pinter(x):
    d = len(x)
    total = 0.0
    for i in range(d):
        xm1 = x[(i - 1) % d]
        xp1 = x[(i + 1) % d]
        a = xm1 * math.sin(x[i]) + math.sin(xp1)
        b = xm1 ** 2 - 2.0 * x[i] + 3.0 * xp1 - math.cos(x[i]) + 1.0
        w = i + 1.0
        total += w * x[i] ** 2
        total += 20.0 * w * math.sin(a) ** 2
        total += w * math.log10(1.0 + w * b ** 2)
    return total


def ref_weierstrass(x):
    a, b = 0.5, 3.0
    const = sum(a ** k * math.cos(math.pi * b ** k) for k in range(21))
    total = 0.0
    for xi in x:
        total += sum(a ** k * math.cos(2.0 * math.pi * b ** k * (xi + 0.5)) for k in range(21))
    return total - len(x) * const


def ref_levy(x):
    w = [1.0 + (xi - 1.0) / 4.0 for xi in x]
    total = math.sin(math.pi * w[0]) ** 2
    for i in range(len(x) - 1):
        total += (w[i] - 1.0) ** 2 * (1.0 + 10.0 * math.sin(math.pi * w[i] + 1.0) ** 2)
    total += (w[-1] - 1.0) ** 2 * (1.0 + math.sin(2.0 * math.pi * w[-1]) ** 2)
    return total


def ref_zakharov(x):
    s1 = sum(xi ** 2 for xi in x)
    s2 = sum(0.5 * (i + 1) * xi for i, xi in enumerate(x))
    return s1 + s2 ** 2 + s2 ** 4


def ref_dixonprice(x):
    total = (x[0] - 1.0) ** 2
    for i in range(1, len(x)):
        total += (i + 1) * (2.0 * x[i] ** 2 - x[i - 1]) ** 2
    return total


def ref_qing(x):
    return sum((xi ** 2 - (i + 1)) ** 2 for i, xi in enumerate(x))


def ref_happycat(x):
    d = len(x)
    s2 = sum(xi ** 2 for xi in x)
    s1 = sum(x)
    return abs(s2 - d) ** 0.25 + (0.5 * s2 + s1) / d + 0.5


def ref_hgbat(x):
    d = len(x)
    s2 = sum(xi ** 2 for xi in x)
    s1 = sum(x)
    return abs(s2 ** 2 - s1 ** 2) ** 0.5 + (0.5 * s2 + s1) / d + 0.5


def ref_xinsheyang2(x):
    return sum(abs(xi) for xi in x) * math.exp(-sum(math.sin(xi ** 2) for xi in x))


def ref_rothyperellipsoid(x):
    d = len(x)
    return sum((d - i) * x[i] ** 2 for i in range(d))


def ref_sumdiffpowers(x):
    return sum(abs(xi) ** (i + 2) for i, xi in enumerate(x))


REFERENCES = {
    "bohachevsky": ref_bohachevsky,
    "pathological": ref_pathological,
    "schafferf6": ref_schafferf6,
    "stretchedv": ref_stretchedv,
    "whitley": ref_whitley,
    "pinter": ref_pinter,
    "weierstrass": ref_weierstrass,
    "levy": ref_levy,
    "zakharov": ref_zakharov,
    "dixonprice": ref_dixonprice,
    "qing": ref_qing,
    "happycat": ref_happycat,
    "hgbat": ref_hgbat,
    "xinsheyang2": ref_xinsheyang2,
    "rothyperellipsoid": ref_rothyperellipsoid,
    "sumdiffpowers": ref_sumdiffpowers,
}

NONNEGATIVE = [
    "sphere",
    "sumsquares",
    "schwefel1_2",
    "schwefel2_20",
    "schwefel2_21",
    "schwefel2_22",
    "schwefel2_23",
    "chungreynolds",
    "quartic",
    "cigar",
    "rothyperellipsoid",
    "sumdiffpowers",
    "rastrigin",
    "qing",
    "alpine1",
    "exponential",
]


class TestRegistry:
    def test_counts(self):
        assert len(ALL_NAMES) == 36
        assert len(list_functions(UNIMODAL)) == 15
        assert len(list_functions(MULTIMODAL)) == 21

    def test_alphabetical_order(self):
        assert ALL_NAMES == sorted(ALL_NAMES)

    def test_modality_partition(self):
        uni = set(list_functions(UNIMODAL))
        multi = set(list_functions(MULTIMODAL))
        assert uni | multi == set(ALL_NAMES)
        assert not uni & multi

    def test_unknown_function(self):
        with pytest.raises(UnknownFunctionError):
            evaluate("bogus", np.zeros(5))
        with pytest.raises(UnknownFunctionError):
            bounds("bogus", 5)

    def test_dimension_too_small(self):
        for name in ("sphere", "rosenbrock", "pinter"):
            with pytest.raises(DimensionTooSmallError):
                evaluate(name, np.array([1.0]))

    def test_bad_modality_rejected(self):
        with pytest.raises(ValueError):
            list_functions("bogus")


class TestBounds:
    def test_sphere(self):
        lb, ub = bounds("sphere", 10)
        assert np.array_equal(lb, np.full(10, -5.12))
        assert np.array_equal(ub, np.full(10, 5.12))

    def test_ackley(self):
        lb, ub = bounds("ackley", 30)
        assert np.array_equal(lb, np.full(30, -32.768))
        assert np.array_equal(ub, np.full(30, 32.768))

    def test_xinsheyang2(self):
        lb, ub = bounds("xinsheyang2", 10)
        assert np.array_equal(lb, np.full(10, -2.0 * np.pi))
        assert np.array_equal(ub, np.full(10, 2.0 * np.pi))

    def test_all_bounds_ordered(self):
        for name in ALL_NAMES:
            spec = get_spec(name)
            assert spec.lower_bound < spec.upper_bound


class TestKnownValues:
    def test_sphere_at_origin(self):
        assert evaluate("sphere", np.zeros(10)) == 0.0

    def test_rosenbrock_at_ones(self):
        assert evaluate("rosenbrock", np.ones(30)) == 0.0

    def test_ackley_at_origin(self):
        assert abs(evaluate("ackley", np.zeros(10))) <= 1e-12

    def test_rastrigin_at_ones(self):
        # each term contributes 1 - 10 cos(2 pi) = -9; 10 terms plus 10 D
        assert evaluate("rastrigin", np.ones(10)) == pytest.approx(10.0, abs=1e-12)

    def test_schwefel_near_minimum(self):
        assert abs(evaluate("schwefel", np.full(10, 420.9687))) <= 1e-3

    def test_quartic_is_noiseless(self):
        x = np.full(5, 0.5)
        expected = sum((i + 1) * 0.5 ** 4 for i in range(5))
        assert evaluate("quartic", x) == pytest.approx(expected, rel=1e-15)


class TestMinimizers:
    def test_exactly_27_have_known_minimizers(self):
        with_xstar = [n for n in ALL_NAMES if get_spec(n).x_star is not None]
        assert len(with_xstar) == 27

    @pytest.mark.parametrize("dimension", [2, 10, 30, 50])
    def test_minimizer_attains_optimum(self, dimension):
        for name in ALL_NAMES:
            spec = get_spec(name)
            if spec.x_star is None:
                continue
            x = spec.x_star(dimension)
            assert x.shape == (dimension,)
            tol = 1e-3 if spec.f_star_is_approx else 1e-8
            residual = abs(evaluate(name, x) - spec.f_star)
            assert residual <= tol, f"{name} at D={dimension}: residual {residual}"

    def test_minimizers_inside_bounds(self):
        for name in ALL_NAMES:
            spec = get_spec(name)
            if spec.x_star is None:
                continue
            lb, ub = bounds(name, 10)
            x = spec.x_star(10)
            assert np.all(x >= lb) and np.all(x <= ub)


class TestAgainstReferences:
    @pytest.mark.parametrize("name", sorted(REFERENCES))
    def test_matches_scalar_loop(self, name):
        rng = np.random.default_rng(hash(name) % 2 ** 32)
        spec = get_spec(name)
        for _ in range(100):
            d = int(rng.integers(2, 12))
            x = rng.uniform(spec.lower_bound, spec.upper_bound, d)
            expected = REFERENCES[name]([float(v) for v in x])
            got = evaluate(name, x)
            assert got == pytest.approx(expected, rel=1e-10, abs=1e-10)


class TestProperties:
    def test_determinism(self):
        rng = np.random.default_rng(0)
        for name in ALL_NAMES:
            spec = get_spec(name)
            x = rng.uniform(spec.lower_bound, spec.upper_bound, 17)
            a = evaluate(name, x)
            b = evaluate(name, x.copy())
            assert a == b

    def test_structural_non_negativity(self):
        rng = np.random.default_rng(1)
        for name in NONNEGATIVE:
            spec = get_spec(name)
            points = rng.uniform(spec.lower_bound, spec.upper_bound, (1000, 8))
            values = evaluate(name, points)
            assert np.all(values >= 0.0), name

    def test_finite_on_random_in_bounds_points(self):
        rng = np.random.default_rng(2)
        for name in ALL_NAMES:
            spec = get_spec(name)
            for d in (2, 10, 50):
                points = rng.uniform(spec.lower_bound, spec.upper_bound, (50, d))
                values = evaluate(name, points)
                assert np.all(np.isfinite(values)), name

    def test_evaluable_outside_bounds(self):
        for name in ALL_NAMES:
            spec = get_spec(name)
            x = np.full(6, spec.upper_bound * 1.5)
            assert np.isfinite(evaluate(name, x)), name

    def test_batch_matches_rows(self):
        # batched reductions may round differently than row-by-row calls,
        # so agreement is to relative precision, not bitwise
        rng = np.random.default_rng(3)
        for name in ALL_NAMES:
            spec = get_spec(name)
            points = rng.uniform(spec.lower_bound, spec.upper_bound, (20, 9))
            batch = evaluate(name, points)
            rows = np.array([evaluate(name, points[i]) for i in range(20)])
            np.testing.assert_allclose(batch, rows, rtol=1e-12, atol=1e-12, err_msg=name)
