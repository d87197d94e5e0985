"""Closed-form side-length laws and the quantities derived from them.

Three models for the length of one side built from tangents to the unit circle:

``SINGLE``
    ``h = cot(theta/2)`` with ``theta ~ U[0, pi]``; one-sided Cauchy on ``(0, inf)``.
``NAIVE``
    ``h + k`` with ``h``, ``k`` independent one-sided Cauchy; excircles included.
``INCIRCLE``
    ``h + k`` with ``(h, k)`` restricted to ``h k > 1``, i.e. the unit circle is the
    incircle; supported on ``(2, inf)``.

All density functions accept scalars or numpy arrays.
"""
from __future__ import annotations

import enum
import math
from typing import Callable

import numpy as np

from .numerics import (
    DEFAULT_SPEC,
    IntegrationResult,
    QuadratureSpec,
    find_root,
    gauss_legendre_cumulative,
    integrate_adaptive,
    integrate_semi_infinite,
)

__all__ = [
    "DensityModel",
    "QuantileBracketError",
    "density_single",
    "density_naive",
    "density_bivariate_hk",
    "integration_limits",
    "f_term",
    "g_term",
    "density_incircle",
    "density_incircle_by_convolution",
    "marginal_alpha",
    "density",
    "total_mass",
    "bivariate_mass",
    "cdf",
    "cdf_many",
    "quantile",
    "median",
    "median_high_precision",
    "acute_region_area",
    "acute_probability_exact",
]

PI2 = math.pi * math.pi


class DensityModel(enum.Enum):
    SINGLE = "single"
    NAIVE = "naive"
    INCIRCLE = "incircle"

    @property
    def support_lower(self) -> float:
        return 2.0 if self is DensityModel.INCIRCLE else 0.0


class QuantileBracketError(ArithmeticError):
    pass


def _positive(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise ValueError(f"{name} must be > 0")
    return arr


def _out(arr: np.ndarray):
    return float(arr) if arr.ndim == 0 else arr


def density_single(h):
    h = _positive(h, "h")
    return _out((2.0 / math.pi) / (h * h + 1.0))


def density_naive(l):
    l = _positive(l, "l")
    return _out((8.0 / PI2) * (l * np.arctan(l) + np.log1p(l * l)) / ((l * l + 4.0) * l))


def density_bivariate_hk(h, k):
    h = _positive(h, "h")
    k = _positive(k, "k")
    val = (8.0 / PI2) / ((h * h + 1.0) * (k * k + 1.0))
    return _out(np.where(h * k > 1.0, val, 0.0))


def _above_two(l) -> np.ndarray:
    l = np.asarray(l, dtype=float)
    if np.any(~(l > 2.0)):
        raise ValueError("l must be > 2")
    return l


def _root_gap(l: np.ndarray) -> np.ndarray:
    # sqrt(l^2 - 4) without cancellation near 2 or overflow for huge l
    return np.sqrt(l - 2.0) * np.sqrt(l + 2.0)


def integration_limits(l):
    """Roots ``a < b`` of ``k^2 - l k + 1``; the incircle constraint is ``a < k < b``."""
    l = _above_two(l)
    b = 0.5 * (l + _root_gap(l))
    return _out(1.0 / b), _out(b)


def f_term(l):
    """``l (arctan b - arctan a)``; since ``a b = 1`` this is ``l arctan((b - a) / 2)``."""
    l = _above_two(l)
    return _out(l * np.arctan(0.5 * _root_gap(l)))


def g_term(l):
    """``ln b - ln a = 2 ln b = 2 arccosh(l / 2)``."""
    l = _above_two(l)
    return _out(2.0 * np.arccosh(0.5 * l))


def density_incircle(l):
    l = np.asarray(l, dtype=float)
    inside = l > 2.0
    ls = np.where(inside, l, 3.0)
    r = _root_gap(ls)
    num = 16.0 * (ls * np.arctan(0.5 * r) + 2.0 * np.arccosh(0.5 * ls))
    with np.errstate(over="ignore"):
        val = num / ls / (PI2 * (ls * ls + 4.0))
    return _out(np.where(inside, val, 0.0))


def density_incircle_by_convolution(l: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """The incircle density by direct quadrature of its defining convolution."""
    a, b = integration_limits(l)
    res = integrate_adaptive(lambda k: 1.0 / (((l - k) ** 2 + 1.0) * (k * k + 1.0)), a, b, spec)
    return (8.0 / PI2) * res.value


def marginal_alpha(alpha):
    alpha = np.asarray(alpha, dtype=float)
    inside = (alpha > 0.0) & (alpha < math.pi)
    return _out(np.where(inside, 2.0 * (math.pi - alpha) / PI2, 0.0))


_DENSITIES = {
    DensityModel.SINGLE: density_single,
    DensityModel.NAIVE: density_naive,
    DensityModel.INCIRCLE: density_incircle,
}

# Switch point between integrating up from the support and subtracting the tail;
# close to each model's median.
_PIVOT = {DensityModel.SINGLE: 1.0, DensityModel.NAIVE: 2.5, DensityModel.INCIRCLE: 5.5}


def density(model: DensityModel, x):
    """Density of ``model`` at ``x``, zero outside the support."""
    model = DensityModel(model)
    x = np.asarray(x, dtype=float)
    lo = model.support_lower
    inside = x > lo
    safe = np.where(inside, x, lo + 1.0)
    return _out(np.where(inside, _DENSITIES[model](safe), 0.0))


def total_mass(model: DensityModel, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    model = DensityModel(model)
    return integrate_semi_infinite(_DENSITIES[model], model.support_lower, spec)


def bivariate_mass(spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    """Iterated integral of the (h, k) density over ``{h k > 1}``."""
    def inner(h: float) -> float:
        return integrate_semi_infinite(lambda k: density_bivariate_hk(h, k), 1.0 / h, spec).value

    return integrate_semi_infinite(inner, 0.0, spec)


def cdf(model: DensityModel, x: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    model = DensityModel(model)
    lo = model.support_lower
    if x <= lo:
        return 0.0
    if math.isinf(x):
        return 1.0
    if x <= _PIVOT[model]:
        # nodes can underflow onto the support boundary when x is tiny
        value = integrate_adaptive(lambda t: density(model, t), lo, x, spec).value
    else:
        value = 1.0 - integrate_semi_infinite(_DENSITIES[model], x, spec).value
    return min(max(value, 0.0), 1.0)


# Maps from t in (0, pi/2) onto each support; the transformed integrands are smooth
# and bounded so short Gauss-Legendre panels are accurate.
def _single_t(t):
    return np.full_like(t, 2.0 / math.pi)


def _naive_t(t):
    x = np.tan(t)
    return density_naive(np.maximum(x, 1e-300)) / np.cos(t) ** 2


def _incircle_t(t):
    s = np.tan(t)
    return density_incircle(2.0 + s * s) * 2.0 * s / np.cos(t) ** 2


_T_MAPS: dict[DensityModel, tuple[Callable, Callable]] = {
    DensityModel.SINGLE: (np.arctan, _single_t),
    DensityModel.NAIVE: (np.arctan, _naive_t),
    DensityModel.INCIRCLE: (lambda l: np.arctan(np.sqrt(np.maximum(l - 2.0, 0.0))), _incircle_t),
}


_T_GRID = 512


def cdf_many(model: DensityModel, xs) -> np.ndarray:
    """CDF at many points at once, for KS statistics and tabulation.

    Sorts the points, maps them to a bounded variable and accumulates 10-point
    Gauss-Legendre panels between neighbours (plus a fixed grid of panels).
    """
    model = DensityModel(model)
    xs = np.asarray(xs, dtype=float)
    flat = xs.ravel()
    order = np.argsort(flat, kind="stable")
    to_t, integrand = _T_MAPS[model]
    lo = model.support_lower
    with np.errstate(invalid="ignore"):
        t = np.where(flat[order] > lo, to_t(np.maximum(flat[order], lo)), 0.0)
    t = np.minimum(t, 0.5 * math.pi)
    # a fixed panel grid keeps sparse inputs accurate
    grid = np.linspace(0.0, 0.5 * math.pi, _T_GRID + 1)
    nodes = np.concatenate((grid, t))
    node_order = np.argsort(nodes, kind="stable")
    cum = np.empty_like(nodes)
    cum[node_order] = gauss_legendre_cumulative(integrand, nodes[node_order])
    out = np.empty_like(flat)
    out[order] = np.clip(cum[grid.size:], 0.0, 1.0)
    out[flat == np.inf] = 1.0
    return out.reshape(xs.shape)


def quantile(model: DensityModel, p: float, spec: QuadratureSpec = DEFAULT_SPEC,
             tol: float = 1e-13) -> float:
    """Invert :func:`cdf` by Brent's method on an expanding bracket."""
    model = DensityModel(model)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p={p!r} outside (0, 1)")
    lo = model.support_lower + (1e-9 if model is DensityModel.INCIRCLE else 0.0)
    hi = max(2.0 * lo, 1.0)
    while cdf(model, hi, spec) < p:
        lo = hi
        hi *= 2.0
        if hi > 1e15:
            raise QuantileBracketError(f"no upper bracket for p={p!r} below 1e15")
    return find_root(lambda x: cdf(model, x, spec) - p, lo, hi, tol)


def median(model: DensityModel, spec: QuadratureSpec = DEFAULT_SPEC, tol: float = 1e-13) -> float:
    return quantile(model, 0.5, spec, tol)


def median_high_precision(model: DensityModel = DensityModel.INCIRCLE, digits: int = 30) -> str:
    """Median to ``digits`` significant digits with mpmath, as a decimal string."""
    import mpmath as mp

    model = DensityModel(model)
    with mp.workdps(digits + 10):
        if model is DensityModel.SINGLE:
            return mp.nstr(mp.tan(mp.pi / 4), digits, strip_zeros=False)
        if model is DensityModel.NAIVE:
            def mass(x):
                return mp.quad(lambda l: 8 / mp.pi ** 2 * (l * mp.atan(l) + mp.log(l * l + 1))
                               / ((l * l + 4) * l), [0, 1, x])
            start = 2.0
        else:
            def dens_t(t):
                # l = 2 cosh t makes the integrand analytic at the lower end
                l = 2 * mp.cosh(t)
                return (16 * (l * mp.atan(mp.sinh(t)) + 2 * t)
                        / (mp.pi ** 2 * (l * l + 4) * l) * 2 * mp.sinh(t))

            def mass(x):
                return mp.quad(dens_t, [0, mp.acosh(x / 2)])
            start = 5.5
        root = mp.findroot(lambda x: mass(x) - mp.mpf(1) / 2, start)
        return mp.nstr(root, digits, strip_zeros=False)


def acute_region_area(spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Area of ``{0 < a, b < pi/2, a + b > pi/2}`` by iterated quadrature."""
    half = 0.5 * math.pi

    def inner(a: float) -> float:
        return integrate_adaptive(lambda b: 1.0, half - a, half, spec).value

    return integrate_adaptive(inner, 0.0, half, spec).value


def acute_probability_exact(spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """Mass of the uniform contact-angle law (density 2/pi^2) where all gaps exceed pi/2."""
    half = 0.5 * math.pi

    def inner(a: float) -> float:
        return integrate_adaptive(lambda b: 2.0 / PI2, half - a, half, spec).value

    return integrate_adaptive(inner, 0.0, half, spec).value
