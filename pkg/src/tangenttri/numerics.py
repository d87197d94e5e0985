"""Numerical kernels: adaptive quadrature, bracketed root finding, minimization.

Quadrature and scalar searches are thin wrappers over QUADPACK (``scipy.integrate.quad``,
adaptive Gauss-Kronrod 21/10 with embedded-pair error estimates) and Brent's methods in
``scipy.optimize``. The wrappers pin tolerances, report subdivision counts and raise
:class:`QuadratureError` instead of warning.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
from scipy import integrate, optimize

__all__ = [
    "QuadratureSpec",
    "IntegrationResult",
    "QuadratureError",
    "integrate_adaptive",
    "integrate_semi_infinite",
    "find_root",
    "minimize_scalar",
    "minimize_bivariate",
    "gauss_legendre_cumulative",
]

RealFunc = Callable[[float], float]


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if int(self.max_subdivisions) < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class IntegrationResult:
    value: float
    error_estimate: float
    subdivisions_used: int
    converged: bool = True

    def __add__(self, other: "IntegrationResult") -> "IntegrationResult":
        return IntegrationResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.subdivisions_used + other.subdivisions_used,
            self.converged and other.converged,
        )


class QuadratureError(ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    The best estimate is kept on ``result``.
    """

    def __init__(self, message: str, result: IntegrationResult):
        super().__init__(f"{message} (value={result.value!r}, error estimate={result.error_estimate:.3g})")
        self.result = result


def _target(value: float, spec: QuadratureSpec) -> float:
    return max(spec.abs_tol, spec.rel_tol * abs(value))


def integrate_adaptive(f: RealFunc, lo: float, hi: float, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    with warnings.catch_warnings():
        # ier is inspected below; QUADPACK's own warnings are redundant.
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err, info = integrate.quad(
            f, lo, hi,
            epsabs=spec.abs_tol, epsrel=spec.rel_tol,
            limit=int(spec.max_subdivisions), full_output=1,
        )[:3]
    result = IntegrationResult(float(value), float(err), int(info["last"]))
    # QUADPACK flags (roundoff, max subdivisions) are judged by the achieved error alone
    if not np.isfinite(value) or err > _target(value, spec):
        raise QuadratureError("adaptive quadrature did not converge", IntegrationResult(
            result.value, result.error_estimate, result.subdivisions_used, False))
    return result


def integrate_semi_infinite(f: RealFunc, lo: float, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    """Integrate ``f`` over ``(lo, inf)``.

    The piece beyond ``c = max(lo, 1)`` is mapped to ``(0, 1/c)`` with ``x = 1/u``; the
    integrand must decay at least like ``x**-2`` so the transformed integrand stays bounded.
    """
    c = max(lo, 1.0)

    def transformed(u: float) -> float:
        x = 1.0 / u
        return (f(x) * x) * x

    tail = integrate_adaptive(transformed, 0.0, 1.0 / c, spec)
    if lo < c:
        return integrate_adaptive(f, lo, c, spec) + tail
    return tail


def find_root(f: RealFunc, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Brent's bracketed root finder; ``f(lo)`` and ``f(hi)`` must differ in sign."""
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return float(lo)
    if fhi == 0:
        return float(hi)
    if flo * fhi > 0:
        raise ValueError(f"root not bracketed: f({lo})={flo}, f({hi})={fhi}")
    return float(optimize.brentq(f, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=500))


def minimize_scalar(f: RealFunc, lo: float, hi: float, tol: float = 1e-10) -> Tuple[float, float]:
    """Bounded Brent minimization on ``[lo, hi]``; returns ``(x, f(x))``."""
    res = optimize.minimize_scalar(f, bounds=(lo, hi), method="bounded",
                                   options={"xatol": tol, "maxiter": 1000})
    x = float(res.x)
    best = (x, float(res.fun))
    # bounded Brent never evaluates the endpoints themselves
    for end in (lo, hi):
        fe = f(end)
        if np.isfinite(fe) and fe < best[1]:
            best = (float(end), float(fe))
    return best


def minimize_bivariate(
    f: Callable[[float, float], float],
    box: Sequence[Tuple[float, float]],
    tol: float = 1e-10,
    starts: int = 5,
) -> Tuple[float, float, float]:
    """Minimize ``f(x, y)`` over a box by nested scalar searches.

    The box is cut into a ``starts x starts`` grid of cells. In every cell an outer
    bounded search over ``x`` minimizes the profile ``min_y f(x, y)`` (inner search
    confined to the cell's ``y`` range). The best cell result wins; ties go to the
    first cell in row-major order so the reduction is deterministic.
    """
    (x0, x1), (y0, y1) = box
    xs = np.linspace(x0, x1, starts + 1)
    ys = np.linspace(y0, y1, starts + 1)
    best = (math.nan, math.nan, math.inf)
    for i, j in itertools.product(range(starts), range(starts)):
        ylo, yhi = ys[j], ys[j + 1]

        def profile(x: float) -> float:
            return minimize_scalar(lambda y: f(x, y), ylo, yhi, tol)[1]

        x, _ = minimize_scalar(profile, xs[i], xs[i + 1], tol)
        y, fxy = minimize_scalar(lambda y: f(x, y), ylo, yhi, tol)
        if fxy < best[2]:
            best = (x, y, fxy)
    return best


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def gauss_legendre_cumulative(g: Callable[[np.ndarray], np.ndarray], t: np.ndarray) -> np.ndarray:
    """Cumulative integrals of a vectorized ``g`` at increasing abscissae ``t``.

    Returns ``I[i] = integral of g from t[0] to t[i]`` using a 10-point Gauss-Legendre
    rule on every gap ``[t[i-1], t[i]]``. Meant for dense, sorted point sets where
    each gap is short relative to the scale on which ``g`` varies.
    """
    t = np.asarray(t, dtype=float)
    a, b = t[:-1], t[1:]
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    nodes = mid[:, None] + half[:, None] * _GL_NODES[None, :]
    pieces = half * (g(nodes) @ _GL_WEIGHTS)
    return np.concatenate(([0.0], np.cumsum(pieces)))
