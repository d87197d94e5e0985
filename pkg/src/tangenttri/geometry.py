"""Triangles whose three sides are tangent to the unit circle.

The first tangent touches the circle at angle ``pi`` (the point ``(-1, 0)``), the second
at ``alpha`` measured counterclockwise, the third at ``-beta`` (``beta`` measured
clockwise). A tangent at circle angle ``phi`` is the line ``x cos(phi) + y sin(phi) = 1``.

Labelling used throughout:

* gaps ``(g1, g2, g3)`` are the arcs between contacts ``(pi, alpha)``, ``(pi, -beta)``
  and ``(alpha, -beta)``;
* ``vertices[i]`` is where the two tangents bounding gap ``i`` meet, so
  ``angles[i] = pi - g_i``;
* ``sides[0]``, ``sides[1]``, ``sides[2]`` lie on the first, second and third tangent.
  ``sides[0]`` is opposite ``vertices[2]``, ``sides[1]`` opposite ``vertices[1]`` and
  ``sides[2]`` opposite ``vertices[0]``.

Scalar helpers take dataclasses; the ``*_arrays`` functions are vectorized equivalents
used by the Monte Carlo estimators.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

__all__ = [
    "ContactAngles",
    "GapTriple",
    "TangencyClass",
    "CircumscribedTriangle",
    "DEGENERACY_GUARD",
    "gaps_from_contacts",
    "classify",
    "tangent_length",
    "side_lengths",
    "vertex_angles",
    "is_acute",
    "triangle_from_contacts",
    "tangent_point",
    "tangent_intersection",
    "gaps_arrays",
    "side_lengths_arrays",
    "vertices_arrays",
]

TWO_PI = 2.0 * math.pi
# Gaps closer than this to pi put a vertex (numerically) at infinity.
DEGENERACY_GUARD = 1e-9


class TangencyClass(enum.Enum):
    INCIRCLE = "incircle"
    EXCIRCLE = "excircle"


@dataclass(frozen=True)
class ContactAngles:
    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not 0.0 < v < math.pi:
                raise ValueError(f"{name}={v!r} outside (0, pi)")


@dataclass(frozen=True)
class GapTriple:
    gamma1: float
    gamma2: float
    gamma3: float

    def __post_init__(self):
        if min(self.as_tuple()) <= 0.0:
            raise ValueError(f"gaps must be positive: {self.as_tuple()}")
        if abs(sum(self.as_tuple()) - TWO_PI) > 1e-12:
            raise ValueError(f"gaps must sum to 2*pi: {self.as_tuple()}")

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.gamma1, self.gamma2, self.gamma3)


@dataclass(frozen=True)
class CircumscribedTriangle:
    vertices: np.ndarray  # shape (3, 2)
    sides: Tuple[float, float, float]
    angles: Tuple[float, float, float]
    perimeter: float
    area: float
    contacts: ContactAngles


def gaps_from_contacts(c: ContactAngles) -> GapTriple:
    return GapTriple(math.pi - c.alpha, math.pi - c.beta, c.alpha + c.beta)


def classify(g: GapTriple) -> TangencyClass:
    """Incircle iff no semicircle holds all three contacts, i.e. every gap < pi.

    A gap of exactly pi is reported as an excircle (the triangle is unbounded).
    """
    return TangencyClass.INCIRCLE if max(g.as_tuple()) < math.pi else TangencyClass.EXCIRCLE


def tangent_length(gamma: float) -> float:
    """Distance from the vertex closing a gap ``gamma`` to either contact point."""
    if not 0.0 < gamma < math.pi:
        raise ValueError(f"gap {gamma!r} outside (0, pi)")
    return math.tan(0.5 * gamma)


def _require_bounded(g: GapTriple) -> None:
    if max(g.as_tuple()) > math.pi - DEGENERACY_GUARD:
        raise ValueError(f"gap within {DEGENERACY_GUARD:g} of pi or beyond, vertex at infinity: {g.as_tuple()}")


def side_lengths(g: GapTriple) -> Tuple[float, float, float]:
    _require_bounded(g)
    t1, t2, t3 = (tangent_length(x) for x in g.as_tuple())
    return (t1 + t2, t1 + t3, t2 + t3)


def vertex_angles(g: GapTriple) -> Tuple[float, float, float]:
    _require_bounded(g)
    return tuple(math.pi - x for x in g.as_tuple())


def is_acute(g: GapTriple) -> bool:
    # right angles (a gap of exactly pi/2) are not acute
    return min(g.as_tuple()) > 0.5 * math.pi


def tangent_point(phi: float) -> np.ndarray:
    return np.array([math.cos(phi), math.sin(phi)])


def tangent_intersection(phi1: float, phi2: float) -> np.ndarray:
    """Intersection of the tangents at circle angles ``phi1`` and ``phi2``."""
    m = np.array([[math.cos(phi1), math.sin(phi1)], [math.cos(phi2), math.sin(phi2)]])
    return np.linalg.solve(m, np.ones(2))


def triangle_from_contacts(c: ContactAngles) -> CircumscribedTriangle:
    g = gaps_from_contacts(c)
    if classify(g) is not TangencyClass.INCIRCLE:
        raise ValueError(f"contacts {c} give an excircle configuration")
    _require_bounded(g)
    phis = (math.pi, c.alpha, -c.beta)
    vertices = np.array([
        tangent_intersection(phis[0], phis[1]),
        tangent_intersection(phis[0], phis[2]),
        tangent_intersection(phis[1], phis[2]),
    ])
    sides = side_lengths(g)
    perimeter = sum(sides)
    # inradius 1: area = r * s with s the semiperimeter
    return CircumscribedTriangle(
        vertices=vertices,
        sides=sides,
        angles=vertex_angles(g),
        perimeter=perimeter,
        area=0.5 * perimeter,
        contacts=c,
    )


# vectorized versions --------------------------------------------------------

def gaps_arrays(alpha, beta) -> np.ndarray:
    """Gaps for arrays of contact angles, shape ``(n, 3)``."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    return np.stack([np.pi - alpha, np.pi - beta, alpha + beta], axis=-1)


def side_lengths_arrays(alpha, beta) -> np.ndarray:
    """Side lengths ``(n, 3)`` for incircle configurations (not checked)."""
    t = np.tan(0.5 * gaps_arrays(alpha, beta))
    return np.stack([t[..., 0] + t[..., 1], t[..., 0] + t[..., 2], t[..., 1] + t[..., 2]], axis=-1)


def vertices_arrays(alpha, beta) -> np.ndarray:
    """Vertex coordinates ``(n, 3, 2)`` by explicit line intersection."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    phis = np.stack([np.full_like(alpha, np.pi), alpha, -beta], axis=-1)
    pairs = ((0, 1), (0, 2), (1, 2))
    out = np.empty(alpha.shape + (3, 2))
    for k, (i, j) in enumerate(pairs):
        a, b = phis[..., i], phis[..., j]
        det = np.sin(b - a)  # cos a sin b - sin a cos b
        out[..., k, 0] = (np.sin(b) - np.sin(a)) / det
        out[..., k, 1] = (np.cos(a) - np.cos(b)) / det
    return out
