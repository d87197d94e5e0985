"""Extremal problems for triangles of unit inradius.

The interesting one is the smallest possible sum of two sides. The closed form comes
from the isosceles family ``(v, v, w)``; :func:`two_side_min_numeric` searches all
triangles instead, to check that the isosceles optimum is the global one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import GapTriple, side_lengths
from .numerics import minimize_bivariate, minimize_scalar

__all__ = [
    "TwoSideOptimum",
    "min_perimeter",
    "side_infimum",
    "v_of_w",
    "two_sides_from_gaps",
    "two_side_objective",
    "two_side_gradient",
    "two_side_hessian",
    "gaps_from_unit_square",
    "two_side_min_closed",
    "two_side_min_numeric",
    "isosceles_search",
]

SQRT5 = math.sqrt(5.0)
GOLDEN = 0.5 * (1.0 + SQRT5)


@dataclass(frozen=True)
class TwoSideOptimum:
    w_star: float
    sum_uv: float
    apex_angle: float
    cos_apex: float
    uv_difference: float = 0.0

    @property
    def apex_angle_deg(self) -> float:
        return math.degrees(self.apex_angle)


def min_perimeter() -> float:
    """Perimeter of the equilateral triangle around the unit circle."""
    return 6.0 * math.sqrt(3.0)


def side_infimum() -> float:
    """Greatest lower bound of a single side; approached, never attained."""
    return 2.0


def v_of_w(w: float) -> float:
    """Leg length of the isosceles unit-inradius triangle with base ``w``."""
    if not w > 2.0:
        raise ValueError(f"base w={w!r} must exceed 2")
    w2 = w * w
    return (w2 + 4.0) * w / (2.0 * (w2 - 4.0))


def two_side_min_closed() -> TwoSideOptimum:
    w = math.sqrt(8.0 + 4.0 * SQRT5)
    cos_apex = SQRT5 - 2.0
    return TwoSideOptimum(
        w_star=w,
        sum_uv=math.sqrt(22.0 + 10.0 * SQRT5),
        apex_angle=math.acos(cos_apex),
        cos_apex=cos_apex,
    )


def two_sides_from_gaps(g: GapTriple):
    """``(u, v, w)``: the two sides meeting at the vertex closing gap 3, then the base."""
    s0, s1, s2 = side_lengths(g)
    return s1, s2, s0


def gaps_from_unit_square(s: float, r: float) -> GapTriple:
    """Bijection from the open unit square onto all incircle gap triples.

    ``gamma1 = pi s`` and ``gamma2`` runs over ``(pi - gamma1, pi)`` as ``r`` runs over
    ``(0, 1)``, which is exactly the range keeping ``gamma3 = 2 pi - gamma1 - gamma2``
    inside ``(0, pi)``.
    """
    g1 = math.pi * s
    g2 = math.pi - g1 + r * g1
    return GapTriple(g1, g2, 2.0 * math.pi - g1 - g2)


def two_side_objective(s: float, r: float) -> float:
    try:
        u, v, _ = two_sides_from_gaps(gaps_from_unit_square(s, r))
    except ValueError:
        return math.inf
    return u + v


def _optimum_from_gaps(g: GapTriple) -> TwoSideOptimum:
    u, v, w = two_sides_from_gaps(g)
    apex = math.pi - g.gamma3
    return TwoSideOptimum(w_star=w, sum_uv=u + v, apex_angle=apex,
                          cos_apex=math.cos(apex), uv_difference=abs(u - v))


def two_side_gradient(g1: float, g2: float):
    """Gradient of ``u + v = t1 + t2 + 2 t3`` in ``(gamma1, gamma2)``, ``t_i = tan(gamma_i / 2)``."""
    g3 = 2.0 * math.pi - g1 - g2
    sec3 = 1.0 / math.cos(0.5 * g3) ** 2
    return [0.5 / math.cos(0.5 * g1) ** 2 - sec3, 0.5 / math.cos(0.5 * g2) ** 2 - sec3]


def two_side_hessian(g1: float, g2: float):
    g3 = 2.0 * math.pi - g1 - g2
    # d/dx sec^2(x/2) = sec^2(x/2) tan(x/2)
    c3 = math.tan(0.5 * g3) / math.cos(0.5 * g3) ** 2
    c1 = 0.5 * math.tan(0.5 * g1) / math.cos(0.5 * g1) ** 2
    c2 = 0.5 * math.tan(0.5 * g2) / math.cos(0.5 * g2) ** 2
    return [[c1 + c3, c3], [c3, c2 + c3]]


def _newton_polish(g1: float, g2: float, steps: int = 30):
    x = np.array([g1, g2])
    for _ in range(steps):
        step = np.linalg.solve(two_side_hessian(*x), two_side_gradient(*x))
        x = x - step
        if np.max(np.abs(step)) < 1e-15:
            break
    return float(x[0]), float(x[1])


def two_side_min_numeric(tol: float = 1e-10) -> TwoSideOptimum:
    """Minimize ``u + v`` over every unit-inradius triangle, isosceles or not.

    A derivative-free nested search over the whole gap space locates the basin; Newton
    steps on the gradient then finish the job, since function values alone cannot
    resolve the flat minimum much below ``sqrt(eps)``.
    """
    eps = 1e-6
    s, r, fbest = minimize_bivariate(two_side_objective, [(eps, 1.0 - eps), (eps, 1.0 - eps)], tol)
    coarse = gaps_from_unit_square(s, r)
    g1, g2 = _newton_polish(coarse.gamma1, coarse.gamma2)
    try:
        polished = GapTriple(g1, g2, 2.0 * math.pi - g1 - g2)
        u, v, _ = two_sides_from_gaps(polished)
    except ValueError:
        return _optimum_from_gaps(coarse)
    # a stationary point worse than the search result is not the minimum
    if u + v <= fbest + 1e-12:
        return _optimum_from_gaps(polished)
    return _optimum_from_gaps(coarse)


def isosceles_search(tol: float = 1e-10, lo: float = 2.1, hi: float = 20.0) -> TwoSideOptimum:
    """One-dimensional search over the base ``w`` of isosceles triangles."""
    w, total = minimize_scalar(lambda w: 2.0 * v_of_w(w), lo, hi, tol)
    v = 0.5 * total
    cos_apex = 1.0 - 0.5 * (w / v) ** 2
    return TwoSideOptimum(w_star=w, sum_uv=total, apex_angle=math.acos(cos_apex), cos_apex=cos_apex)
