import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tangenttri.geometry import (
    ContactAngles,
    GapTriple,
    TangencyClass,
    classify,
    gaps_arrays,
    gaps_from_contacts,
    is_acute,
    side_lengths,
    side_lengths_arrays,
    tangent_length,
    triangle_from_contacts,
    vertex_angles,
    vertices_arrays,
)

PI = math.pi


def incircle_contacts():
    """Contact angles with alpha + beta < pi, kept away from the degenerate edges."""
    return st.tuples(st.floats(1e-3, 1 - 1e-3), st.floats(1e-3, 1 - 1e-3)).filter(
        lambda uv: uv[0] + uv[1] < 1 - 1e-3).map(lambda uv: ContactAngles(PI * uv[0], PI * uv[1]))


def heron(a, b, c):
    s = 0.5 * (a + b + c)
    return math.sqrt(s * (s - a) * (s - b) * (s - c))


def line_distance(p, q):
    """Distance from the origin to the line through p and q."""
    return abs(p[0] * q[1] - p[1] * q[0]) / math.dist(p, q)


def test_contact_angle_validation():
    with pytest.raises(ValueError):
        ContactAngles(0.0, 1.0)
    with pytest.raises(ValueError):
        ContactAngles(1.0, PI)


def test_gap_validation():
    with pytest.raises(ValueError):
        GapTriple(PI, PI, 0.0)
    with pytest.raises(ValueError):
        GapTriple(1.0, 1.0, 1.0)


@pytest.mark.parametrize("alpha, beta, expected", [
    (PI / 3, PI / 3, (2 * PI / 3, 2 * PI / 3, 2 * PI / 3)),
    (PI / 2, PI / 4, (PI / 2, 3 * PI / 4, 3 * PI / 4)),
    (0.9 * PI, 0.2 * PI, (0.1 * PI, 0.8 * PI, 1.1 * PI)),
])
def test_gaps_from_contacts(alpha, beta, expected):
    g = gaps_from_contacts(ContactAngles(alpha, beta))
    assert g.as_tuple() == pytest.approx(expected, abs=1e-15)


def test_classify():
    third = 2 * PI / 3
    assert classify(GapTriple(third, third, third)) is TangencyClass.INCIRCLE
    assert classify(gaps_from_contacts(ContactAngles(0.9 * PI, 0.2 * PI))) is TangencyClass.EXCIRCLE
    assert classify(GapTriple(PI / 2, PI / 2, PI)) is TangencyClass.EXCIRCLE


def test_tangent_length():
    assert tangent_length(PI / 2) == pytest.approx(1.0, abs=1e-15)
    assert tangent_length(2 * PI / 3) == pytest.approx(math.sqrt(3), abs=1e-15)
    assert tangent_length(PI - PI / 2) == pytest.approx(1.0 / math.tan(PI / 4), abs=1e-15)
    for bad in (0.0, PI, -1.0, 4.0):
        with pytest.raises(ValueError):
            tangent_length(bad)


def test_tangent_length_matches_cot_on_grid():
    for theta in np.linspace(0.01, PI - 0.01, 200):
        assert abs(tangent_length(PI - theta) - 1.0 / math.tan(theta / 2)) <= 1e-12 * max(1.0, 1 / math.tan(theta / 2))


def test_equilateral():
    third = 2 * PI / 3
    g = GapTriple(third, third, third)
    assert side_lengths(g) == pytest.approx((2 * math.sqrt(3),) * 3, rel=1e-15)
    assert sum(side_lengths(g)) == pytest.approx(6 * math.sqrt(3), rel=1e-15)
    assert vertex_angles(g) == pytest.approx((PI / 3,) * 3, abs=1e-15)
    assert is_acute(g)
    tri = triangle_from_contacts(ContactAngles(PI / 3, PI / 3))
    np.testing.assert_allclose(np.linalg.norm(tri.vertices, axis=1), 2.0, rtol=1e-14)
    assert tri.perimeter == pytest.approx(6 * math.sqrt(3), rel=1e-14)


def test_side_approaches_two():
    sides = []
    for eps in (1e-1, 1e-3, 1e-5):
        g = gaps_from_contacts(ContactAngles(PI / 2, PI / 2 - eps))
        sides.append(side_lengths(g)[0])
    assert all(s > 2 for s in sides)
    assert sides[0] > sides[1] > sides[2]
    # 1 + cot(pi/4 - eps/2) = 2 + eps + O(eps^2)
    assert sides[2] - 2 == pytest.approx(1e-5, rel=1e-4)


def test_vertex_angles_and_acuteness():
    assert vertex_angles(GapTriple(PI / 2, 3 * PI / 4, 3 * PI / 4)) == pytest.approx((PI / 2, PI / 4, PI / 4))
    assert not is_acute(GapTriple(PI / 2, 3 * PI / 4, 3 * PI / 4))
    assert not is_acute(GapTriple(0.4 * PI, 0.8 * PI, 0.8 * PI))


def test_vertex_from_intro_construction():
    tri = triangle_from_contacts(ContactAngles(PI / 2, PI / 4))
    np.testing.assert_allclose(tri.vertices[0], [-1.0, 1.0], atol=1e-14)


def test_degenerate_and_excircle_rejected():
    with pytest.raises(ValueError):
        triangle_from_contacts(ContactAngles(0.9 * PI, 0.2 * PI))
    with pytest.raises(ValueError):
        side_lengths(GapTriple(PI - 1e-10, PI / 2, PI / 2 + 1e-10))
    with pytest.raises(ValueError):
        triangle_from_contacts(ContactAngles(0.5 * PI, 0.5 * PI - 1e-11))


@settings(max_examples=300, deadline=None)
@given(incircle_contacts())
def test_triangle_invariants(c):
    g = gaps_from_contacts(c)
    assert abs(sum(g.as_tuple()) - 2 * PI) <= 1e-12
    assert classify(g) is TangencyClass.INCIRCLE
    tri = triangle_from_contacts(c)
    v = tri.vertices
    # sides[i] lies on tangent i: tangent 0 joins vertices 0 and 1, tangent 1 joins 0 and 2,
    # tangent 2 joins 1 and 2
    pairs = [(0, 1), (0, 2), (1, 2)]
    for side, (i, j) in zip(tri.sides, pairs):
        assert math.dist(v[i], v[j]) == pytest.approx(side, rel=1e-9)
        assert line_distance(v[i], v[j]) == pytest.approx(1.0, abs=1e-9)
    assert tri.area == pytest.approx(heron(*tri.sides), rel=1e-9)
    d1, d2 = v[1] - v[0], v[2] - v[0]
    shoelace = 0.5 * abs(d1[0] * d2[1] - d1[1] * d2[0])
    assert shoelace == pytest.approx(tri.perimeter / 2, rel=1e-9)
    assert abs(sum(tri.angles) - PI) <= 1e-10
    # law of cosines: angle i sits opposite sides[2 - i]
    s = tri.sides
    for i, angle in enumerate(tri.angles):
        opp = s[2 - i]
        a, b = [x for k, x in enumerate(s) if k != 2 - i]
        cos_law = (a * a + b * b - opp * opp) / (2 * a * b)
        assert math.cos(angle) == pytest.approx(cos_law, abs=1e-9)
    assert is_acute(g) == all(x < PI / 2 for x in tri.angles)


def test_vectorized_matches_scalar():
    rng = np.random.default_rng(3)
    u, v = rng.random(10_000), rng.random(10_000)
    flip = u + v > 1
    u[flip], v[flip] = 1 - u[flip], 1 - v[flip]
    alpha, beta = PI * u, PI * v
    keep = (np.pi - gaps_arrays(alpha, beta).max(axis=1)) > 1e-6
    alpha, beta = alpha[keep], beta[keep]
    sides = side_lengths_arrays(alpha, beta)
    verts = vertices_arrays(alpha, beta)
    dist = np.stack([
        np.linalg.norm(verts[:, 0] - verts[:, 1], axis=1),
        np.linalg.norm(verts[:, 0] - verts[:, 2], axis=1),
        np.linalg.norm(verts[:, 1] - verts[:, 2], axis=1),
    ], axis=1)
    np.testing.assert_allclose(dist, sides, rtol=1e-9)
    for k in range(0, alpha.size, 997):
        assert side_lengths(gaps_from_contacts(ContactAngles(alpha[k], beta[k]))) == pytest.approx(sides[k], rel=1e-14)
