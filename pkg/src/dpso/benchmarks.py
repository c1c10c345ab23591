"""Benchmark objective functions for box-constrained global minimization.

Thirty-six classic test functions (15 unimodal, 21 multimodal), each
evaluable at any dimension D >= 2 inside a symmetric box, with the known
global minimum value and, where the minimizer has a simple closed form, a
constructor for the minimizing point.

Every evaluator is a deterministic pure function of its input, computed in
64-bit floating point, and vectorized over leading axes: a (D,) vector
yields a scalar and an (N, D) batch yields N values.  Points outside the
bounds are still evaluable; bound handling is the optimizer's job.
"""

import numpy as np
from dataclasses import dataclass
from typing import Callable, Optional

__all__ = [
    "UNIMODAL",
    "MULTIMODAL",
    "BenchmarkSpec",
    "UnknownFunctionError",
    "DimensionTooSmallError",
    "get_spec",
    "evaluate",
    "bounds",
    "list_functions",
]

UNIMODAL = "unimodal"
MULTIMODAL = "multimodal"


class UnknownFunctionError(KeyError):
    """Raised when a function identifier is not in the registry."""


class DimensionTooSmallError(ValueError):
    """Raised when a point has fewer than 2 coordinates."""


@dataclass(frozen=True)
class BenchmarkSpec:
    """A named objective with bounds, modality, and known optimum.

    ``x_star`` builds the known minimizer for a given dimension when one is
    analytically available as a simple closed form; ``f_star_is_approx``
    flags optima (Schwefel) whose tabulated value is only approximate.
    """

    name: str
    modality: str
    lower_bound: float
    upper_bound: float
    evaluator: Callable[[np.ndarray], np.ndarray]
    f_star: float = 0.0
    x_star: Optional[Callable[[int], np.ndarray]] = None
    f_star_is_approx: bool = False


def _index(x):
    """1-based coordinate indices, shaped for broadcasting over batches."""
    return np.arange(1, x.shape[-1] + 1, dtype=np.float64)


# ---------------------------------------------------------------------------
# unimodal functions
# ---------------------------------------------------------------------------

def sphere(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(x * x, axis=-1)


def rosenbrock(x):
    x = np.asarray(x, dtype=np.float64)
    head = x[..., :-1]
    tail = x[..., 1:]
    return np.sum(100.0 * (tail - head * head) ** 2 + (1.0 - head) ** 2, axis=-1)


def sumsquares(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(_index(x) * x * x, axis=-1)


def schwefel2_22(x):
    x = np.asarray(x, dtype=np.float64)
    a = np.abs(x)
    return np.sum(a, axis=-1) + np.prod(a, axis=-1)


def schwefel1_2(x):
    x = np.asarray(x, dtype=np.float64)
    c = np.cumsum(x, axis=-1)
    return np.sum(c * c, axis=-1)


def schwefel2_21(x):
    x = np.asarray(x, dtype=np.float64)
    return np.max(np.abs(x), axis=-1)


def schwefel2_20(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(np.abs(x), axis=-1)


def schwefel2_23(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(x ** 10, axis=-1)


def dixonprice(x):
    x = np.asarray(x, dtype=np.float64)
    i = np.arange(2, x.shape[-1] + 1, dtype=np.float64)
    head = (x[..., 0] - 1.0) ** 2
    return head + np.sum(i * (2.0 * x[..., 1:] ** 2 - x[..., :-1]) ** 2, axis=-1)


def zakharov(x):
    x = np.asarray(x, dtype=np.float64)
    s1 = np.sum(x * x, axis=-1)
    s2 = np.sum(0.5 * _index(x) * x, axis=-1)
    return s1 + s2 ** 2 + s2 ** 4


def rothyperellipsoid(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    weights = d - np.arange(d, dtype=np.float64)  # D, D-1, ..., 1
    return np.sum(weights * x * x, axis=-1)


def sumdiffpowers(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(np.abs(x) ** (_index(x) + 1.0), axis=-1)


def chungreynolds(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(x * x, axis=-1) ** 2


def quartic(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(_index(x) * x ** 4, axis=-1)


def cigar(x):
    x = np.asarray(x, dtype=np.float64)
    return x[..., 0] ** 2 + 1.0e6 * np.sum(x[..., 1:] ** 2, axis=-1)


# ---------------------------------------------------------------------------
# multimodal functions
# ---------------------------------------------------------------------------

def rastrigin(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    return 10.0 * d + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x), axis=-1)


def ackley(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    rms = np.sqrt(np.sum(x * x, axis=-1) / d)
    mean_cos = np.sum(np.cos(2.0 * np.pi * x), axis=-1) / d
    return -20.0 * np.exp(-0.2 * rms) - np.exp(mean_cos) + 20.0 + np.e


def griewank(x):
    x = np.asarray(x, dtype=np.float64)
    s = np.sum(x * x, axis=-1) / 4000.0
    p = np.prod(np.cos(x / np.sqrt(_index(x))), axis=-1)
    return 1.0 + s - p


def schwefel(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    return 418.9829 * d - np.sum(x * np.sin(np.sqrt(np.abs(x))), axis=-1)


def levy(x):
    x = np.asarray(x, dtype=np.float64)
    w = 1.0 + (x - 1.0) / 4.0
    first = np.sin(np.pi * w[..., 0]) ** 2
    mid = w[..., :-1]
    middle = np.sum((mid - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * mid + 1.0) ** 2), axis=-1)
    last = (w[..., -1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * w[..., -1]) ** 2)
    return first + middle + last


def bohachevsky(x):
    x = np.asarray(x, dtype=np.float64)
    a = x[..., :-1]
    b = x[..., 1:]
    terms = (
        a * a
        + 2.0 * b * b
        - 0.3 * np.cos(3.0 * np.pi * a)
        - 0.4 * np.cos(4.0 * np.pi * b)
        + 0.7
    )
    return np.sum(terms, axis=-1)


def salomon(x):
    x = np.asarray(x, dtype=np.float64)
    r = np.sqrt(np.sum(x * x, axis=-1))
    return 1.0 - np.cos(2.0 * np.pi * r) + 0.1 * r


def alpine1(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(np.abs(x * np.sin(x) + 0.1 * x), axis=-1)


def xinsheyang2(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(np.abs(x), axis=-1) * np.exp(-np.sum(np.sin(x * x), axis=-1))


def qing(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum((x * x - _index(x)) ** 2, axis=-1)


def pathological(x):
    x = np.asarray(x, dtype=np.float64)
    a = x[..., :-1]
    b = x[..., 1:]
    num = np.sin(np.sqrt(100.0 * a * a + b * b)) ** 2 - 0.5
    den = 1.0 + 0.001 * (a - b) ** 4
    return np.sum(0.5 + num / den, axis=-1)


def schafferf6(x):
    x = np.asarray(x, dtype=np.float64)
    a = x[..., :-1]
    b = x[..., 1:]
    s = a * a + b * b
    num = np.sin(np.sqrt(s)) ** 2 - 0.5
    den = (1.0 + 0.001 * s) ** 2
    return np.sum(0.5 + num / den, axis=-1)


def wavy(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    return 1.0 - np.sum(np.cos(10.0 * x) * np.exp(-x * x / 2.0), axis=-1) / d


# Weierstrass series truncated at k = 20 with a = 0.5, b = 3.  The constant
# term reuses the same expression at x = 0 so the function is exactly zero
# at the origin despite the huge cosine arguments.
_WEIER_A_POW = 0.5 ** np.arange(21, dtype=np.float64)
_WEIER_B_POW = 3.0 ** np.arange(21, dtype=np.float64)
_WEIER_CONST = float(np.sum(_WEIER_A_POW * np.cos(2.0 * np.pi * _WEIER_B_POW * 0.5)))


def weierstrass(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    inner = _WEIER_A_POW * np.cos(2.0 * np.pi * _WEIER_B_POW * (x[..., None] + 0.5))
    return np.sum(inner, axis=(-1, -2)) - d * _WEIER_CONST


def pinter(x):
    x = np.asarray(x, dtype=np.float64)
    i = _index(x)
    # cyclic neighbours: x_0 = x_D and x_{D+1} = x_1
    xm1 = np.roll(x, 1, axis=-1)
    xp1 = np.roll(x, -1, axis=-1)
    a = xm1 * np.sin(x) + np.sin(xp1)
    b = xm1 * xm1 - 2.0 * x + 3.0 * xp1 - np.cos(x) + 1.0
    s1 = np.sum(i * x * x, axis=-1)
    s2 = 20.0 * np.sum(i * np.sin(a) ** 2, axis=-1)
    s3 = np.sum(i * np.log10(1.0 + i * b * b), axis=-1)
    return s1 + s2 + s3


def stretchedv(x):
    x = np.asarray(x, dtype=np.float64)
    t = x[..., :-1] ** 2 + x[..., 1:] ** 2
    return np.sum(t ** 0.25 * (np.sin(50.0 * t ** 0.1) ** 2 + 0.1), axis=-1)


def happycat(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    s2 = np.sum(x * x, axis=-1)
    s1 = np.sum(x, axis=-1)
    return np.abs(s2 - d) ** 0.25 + (0.5 * s2 + s1) / d + 0.5


def hgbat(x):
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    s2 = np.sum(x * x, axis=-1)
    s1 = np.sum(x, axis=-1)
    return np.sqrt(np.abs(s2 ** 2 - s1 ** 2)) + (0.5 * s2 + s1) / d + 0.5


def whitley(x):
    x = np.asarray(x, dtype=np.float64)
    xi2 = (x * x)[..., :, None]
    xj = x[..., None, :]
    y = 100.0 * (xi2 - xj) ** 2 + (1.0 - xj) ** 2
    return np.sum(y * y / 4000.0 - np.cos(y) + 1.0, axis=(-1, -2))


def exponential(x):
    x = np.asarray(x, dtype=np.float64)
    return 1.0 - np.exp(-0.5 * np.sum(x * x, axis=-1))


def cosinemixture(x):
    x = np.asarray(x, dtype=np.float64)
    return np.sum(x * x + 0.1 * (1.0 - np.cos(5.0 * np.pi * x)), axis=-1)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def _zeros(d):
    return np.zeros(d)

def _ones(d):
    return np.ones(d)

def _minus_ones(d):
    return np.full(d, -1.0)

def _sqrt_index(d):
    return np.sqrt(np.arange(1, d + 1, dtype=np.float64))

def _schwefel_min(d):
    return np.full(d, 420.9687)


_REGISTRY = {}


def _register(name, modality, lower, upper, evaluator, x_star=None, f_star_is_approx=False):
    _REGISTRY[name] = BenchmarkSpec(
        name=name,
        modality=modality,
        lower_bound=lower,
        upper_bound=upper,
        evaluator=evaluator,
        f_star=0.0,
        x_star=x_star,
        f_star_is_approx=f_star_is_approx,
    )


_register("sphere", UNIMODAL, -5.12, 5.12, sphere, _zeros)
_register("rosenbrock", UNIMODAL, -5.0, 10.0, rosenbrock, _ones)
_register("sumsquares", UNIMODAL, -10.0, 10.0, sumsquares, _zeros)
_register("schwefel2_22", UNIMODAL, -10.0, 10.0, schwefel2_22, _zeros)
_register("schwefel1_2", UNIMODAL, -100.0, 100.0, schwefel1_2, _zeros)
_register("schwefel2_21", UNIMODAL, -100.0, 100.0, schwefel2_21, _zeros)
_register("schwefel2_20", UNIMODAL, -100.0, 100.0, schwefel2_20, _zeros)
_register("schwefel2_23", UNIMODAL, -10.0, 10.0, schwefel2_23, _zeros)
_register("dixonprice", UNIMODAL, -10.0, 10.0, dixonprice)
_register("zakharov", UNIMODAL, -5.0, 10.0, zakharov, _zeros)
_register("rothyperellipsoid", UNIMODAL, -65.536, 65.536, rothyperellipsoid, _zeros)
_register("sumdiffpowers", UNIMODAL, -1.0, 1.0, sumdiffpowers, _zeros)
_register("chungreynolds", UNIMODAL, -100.0, 100.0, chungreynolds, _zeros)
_register("quartic", UNIMODAL, -1.28, 1.28, quartic, _zeros)
_register("cigar", UNIMODAL, -100.0, 100.0, cigar, _zeros)

_register("rastrigin", MULTIMODAL, -5.12, 5.12, rastrigin, _zeros)
_register("ackley", MULTIMODAL, -32.768, 32.768, ackley, _zeros)
_register("griewank", MULTIMODAL, -600.0, 600.0, griewank, _zeros)
_register("schwefel", MULTIMODAL, -500.0, 500.0, schwefel, _schwefel_min, f_star_is_approx=True)
_register("levy", MULTIMODAL, -10.0, 10.0, levy, _ones)
_register("bohachevsky", MULTIMODAL, -100.0, 100.0, bohachevsky)
_register("salomon", MULTIMODAL, -100.0, 100.0, salomon, _zeros)
_register("alpine1", MULTIMODAL, -10.0, 10.0, alpine1, _zeros)
_register("xinsheyang2", MULTIMODAL, -2.0 * np.pi, 2.0 * np.pi, xinsheyang2, _zeros)
_register("qing", MULTIMODAL, -500.0, 500.0, qing, _sqrt_index)
_register("pathological", MULTIMODAL, -100.0, 100.0, pathological)
_register("schafferf6", MULTIMODAL, -100.0, 100.0, schafferf6)
_register("wavy", MULTIMODAL, -np.pi, np.pi, wavy, _zeros)
_register("weierstrass", MULTIMODAL, -0.5, 0.5, weierstrass)
_register("pinter", MULTIMODAL, -10.0, 10.0, pinter, _zeros)
_register("stretchedv", MULTIMODAL, -10.0, 10.0, stretchedv)
_register("happycat", MULTIMODAL, -2.0, 2.0, happycat)
_register("hgbat", MULTIMODAL, -2.0, 2.0, hgbat)
_register("whitley", MULTIMODAL, -10.24, 10.24, whitley)
_register("exponential", MULTIMODAL, -1.0, 1.0, exponential, _zeros)
_register("cosinemixture", MULTIMODAL, -1.0, 1.0, cosinemixture, _zeros)


def get_spec(name: str) -> BenchmarkSpec:
    """Look up the registry entry for a canonical function identifier."""
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownFunctionError(name) from None


def evaluate(name: str, x) -> float:
    """Evaluate a registered function at a point (or batch of points).

    Parameters
    ----------
    name : str
        Canonical identifier, e.g. ``"sphere"`` or ``"schwefel2_22"``.
    x : array_like
        Point of shape (D,) with D >= 2, or a batch of shape (N, D).

    Returns
    -------
    float or ndarray
        Scalar for a single point, (N,) array for a batch.
    """
    spec = get_spec(name)
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1] < 2:
        raise DimensionTooSmallError(
            f"{name} requires at least 2 dimensions, got {x.shape[-1]}"
        )
    out = spec.evaluator(x)
    return float(out) if np.ndim(out) == 0 else out


def bounds(name: str, dimension: int):
    """Return the (lb, ub) bound vectors of a function at a given dimension."""
    spec = get_spec(name)
    lb = np.full(dimension, spec.lower_bound, dtype=np.float64)
    ub = np.full(dimension, spec.upper_bound, dtype=np.float64)
    return lb, ub


def list_functions(modality: Optional[str] = None):
    """All registered identifiers in alphabetical order, optionally by modality."""
    if modality is not None and modality not in (UNIMODAL, MULTIMODAL):
        raise ValueError(f"unknown modality {modality!r}")
    names = [
        name
        for name, spec in _REGISTRY.items()
        if modality is None or spec.modality == modality
    ]
    return sorted(names)
