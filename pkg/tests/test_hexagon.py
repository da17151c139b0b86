import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexacent.geom_core import (
    ConvexPolygon,
    DegenerateInput,
    Point,
    area_and_centroid,
    convex_hull,
    polygon_area2,
)
from hexacent.hexagon import (
    AffineRegularHexagon,
    ThinBody,
    inscribe,
)

F = Fraction


def P(x, y):
    return Point(F(x), F(y))


def canon():
    return AffineRegularHexagon(P(0, 0), P(1, 1), P(-1, 1))


def close(p, q, tol=1e-9):
    return math.hypot(float(p.x) - float(q.x), float(p.y) - float(q.y)) <= tol


class TestAffineRegularHexagon:
    def test_canonical_vertices(self):
        assert [tuple(p) for p in canon().vertices] == [
            (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1), (2, 0)]

    def test_area(self):
        assert canon().area() == 6

    def test_orientation_normalized(self):
        h = AffineRegularHexagon(P(0, 0), P(-1, 1), P(1, 1))
        assert h.area() == 6
        assert set(map(tuple, h.vertices)) == set(map(tuple, canon().vertices))

    def test_collinear_offsets_rejected(self):
        with pytest.raises(DegenerateInput):
            AffineRegularHexagon(P(0, 0), P(1, 1), P(2, 2))

    def test_outer_vertices(self):
        t = canon().outer_vertices()
        assert tuple(t[0]) == (3, 1)
        assert tuple(t[1]) == (0, 2)
        # tips come in opposite pairs through the center
        for i in range(3):
            assert t[i] + t[i + 3] == Point(0, 0) + Point(0, 0)

    def test_star_area_is_twice_hexagon(self):
        star = canon().star_vertices()
        assert len(star) == 12
        assert polygon_area2(star) == 24

    def test_wing_triangles(self):
        wings = canon().wing_triangles()
        assert len(wings) == 6
        for tri in wings:
            assert abs(polygon_area2(tri)) == 2
        top = wings[1]
        assert set(map(tuple, top)) == {(1, 1), (0, 2), (-1, 1)}

    def test_to_canonical_exact(self):
        h = AffineRegularHexagon(P(3, -2), P(2, 1), P(1, 3))
        M = h.to_canonical()
        for got, want in zip(h.vertices, canon().vertices):
            assert M.apply(got) == want


class TestInscribe:
    def test_hexagon_body_recovers_itself(self):
        fit = inscribe(canon().polygon())
        assert fit.angle == 0.0
        assert fit.edge_half_length == pytest.approx(1.0, abs=1e-12)
        for got, want in zip(fit.hexagon.vertices, canon().vertices):
            assert close(got, want, 1e-9)

    def test_square_uses_plateau_slack(self):
        sq = ConvexPolygon([P(-1, -1), P(1, -1), P(1, 1), P(-1, 1)])
        fit = inscribe(sq)
        assert fit.angle == 0.0
        got = {(round(float(p.x), 9), round(float(p.y), 9))
               for p in fit.hexagon.vertices}
        assert got == {(0.5, 1.0), (-0.5, 1.0), (-1.0, 0.0),
                       (-0.5, -1.0), (0.5, -1.0), (1.0, 0.0)}
        assert fit.hexagon.area() == pytest.approx(3.0)

    def test_triangle_thirds(self):
        tri = ConvexPolygon([P(0, 0), P(1, 0), P(0, 1)])
        fit = inscribe(tri)
        got = {(round(float(p.x), 9), round(float(p.y), 9))
               for p in fit.hexagon.vertices}
        third = round(1 / 3, 9)
        two = round(2 / 3, 9)
        assert got == {(third, two), (0.0, two), (0.0, third),
                       (third, 0.0), (two, 0.0), (two, third)}
        assert fit.hexagon.area() == pytest.approx(1 / 3)

    def test_regular_polygon(self):
        pts = [Point(math.cos(2 * math.pi * k / 17),
                     math.sin(2 * math.pi * k / 17)) for k in range(17)]
        body = ConvexPolygon(pts)
        fit = inscribe(body)
        assert fit.residual <= 1e-7 * body.diameter()
        for v in fit.hexagon.vertices:
            assert body.contains(v, tol=1e-6)

    def test_random_hulls(self):
        rng = random.Random(20240817)
        for _ in range(60):
            pts = [Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
                   for _ in range(rng.randrange(4, 24))]
            try:
                body = convex_hull(pts)
            except DegenerateInput:
                continue
            fit = inscribe(body)
            d = body.diameter()
            assert fit.residual <= 1e-7 * d
            tol = 1e-6 * d * d
            for v in fit.hexagon.vertices:
                assert body.contains(v, tol=tol)
            area, _ = area_and_centroid(body)
            assert fit.hexagon.area() <= area + 1e-9

    def test_exact_input_accepted(self):
        body = ConvexPolygon([P(0, 0), P(3, 1), P(2, 4), P(-1, 2)])
        fit = inscribe(body)
        assert fit.residual <= 1e-7 * body.diameter()

    def test_thin_body_rejected(self):
        with pytest.raises(ThinBody):
            inscribe(ConvexPolygon([Point(0.0, 0.0), Point(1.0, 0.0),
                                    Point(1.0, 1e-8), Point(0.0, 1e-8)]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)),
                min_size=3, max_size=14))
def test_inscription_properties(coords):
    pts = [P(x, y) for x, y in coords]
    try:
        body = convex_hull(pts)
    except DegenerateInput:
        return
    fit = inscribe(body)
    d = body.diameter()
    assert fit.residual <= 1e-7 * d
    area, _ = area_and_centroid(body)
    assert 0 < fit.hexagon.area() <= float(area) + 1e-9
