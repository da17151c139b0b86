from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexacent.geom_core import (
    AffineMap,
    ConvexPolygon,
    DegenerateInput,
    GeomError,
    Line,
    NonConvex,
    Parallel,
    Point,
    apply_map,
    area_and_centroid,
    boundary_distance,
    clip_halfplane,
    composite_centroid,
    convex_hull,
    cross3,
    gauge,
    homothet,
    line_intersect,
    polygon_area2,
    supporting_cone,
)

F = Fraction


def P(x, y):
    return Point(F(x), F(y))


def poly(*coords):
    return ConvexPolygon([P(x, y) for x, y in coords])


class TestConvexPolygon:
    def test_canonical_hexagon_accepted(self, canon_hexagon):
        assert len(canon_hexagon) == 6
        assert canon_hexagon.exact

    def test_cw_input_reversed_to_ccw(self):
        p = poly((0, 0), (0, 1), (1, 1), (1, 0))
        assert polygon_area2(p.vertices) == 2

    def test_collinear_vertex_pruned(self):
        p = poly((0, 0), (1, 0), (2, 0), (2, 2), (0, 2))
        assert len(p) == 4

    def test_duplicate_vertex_pruned(self):
        p = poly((0, 0), (2, 0), (2, 0), (2, 2), (0, 2))
        assert len(p) == 4

    def test_nonconvex_names_violating_triple(self):
        with pytest.raises(NonConvex) as ei:
            poly((0, 0), (2, 0), (1, 1), (2, 2), (0, 2))
        assert (F(1), F(1)) in ei.value.triple

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateInput):
            poly((0, 0), (1, 1), (2, 2))
        with pytest.raises(DegenerateInput):
            ConvexPolygon([P(0, 0), P(1, 0)])

    def test_mixed_modes_rejected(self):
        with pytest.raises(GeomError):
            ConvexPolygon([P(0, 0), Point(1.0, 0.0), P(0, 1)])

    def test_contains(self, canon_hexagon):
        assert canon_hexagon.contains(P(0, 0))
        assert canon_hexagon.contains(P(2, 0))        # vertex is inside (closed)
        assert canon_hexagon.contains(P(0, 1))        # edge midpoint
        assert not canon_hexagon.contains(P(2, 1))


class TestAreaCentroid:
    def test_canonical_hexagon(self, canon_hexagon):
        area, cen = area_and_centroid(canon_hexagon)
        assert area == 6
        assert (cen.x, cen.y) == (0, 0)

    def test_tight_pentagon_exact(self, tight_pentagon):
        area, cen = area_and_centroid(tight_pentagon)
        assert area == 7
        assert cen.x == 0
        assert cen.y == F(4, 21)

    def test_cap_triangle(self):
        # cap over the top edge with apex (0, 3/2)
        area, cen = area_and_centroid(poly((1, 1), (-1, 1), (0, F(3, 2))))
        assert area == F(1, 2)
        assert cen.y == F(7, 6)

    def test_cyclic_rotation_invariance(self, tight_pentagon):
        v = tight_pentagon.vertices
        for k in range(1, len(v)):
            area, cen = area_and_centroid(ConvexPolygon(v[k:] + v[:k]))
            assert area == 7 and cen == Point(F(0), F(4, 21))

    def test_float_mode(self):
        sq = ConvexPolygon([Point(0.0, 0.0), Point(2.0, 0.0),
                            Point(2.0, 2.0), Point(0.0, 2.0)])
        area, cen = area_and_centroid(sq)
        assert area == pytest.approx(4.0)
        assert cen.x == pytest.approx(1.0) and cen.y == pytest.approx(1.0)


class TestCompositeCentroid:
    def test_split_recombines(self, tight_pentagon):
        # split the pentagon along y = 1: hexagon part + cap triangle
        hexagon = clip_halfplane(tight_pentagon, Line(0, 1, 1), keep="le")
        cap = clip_halfplane(tight_pentagon, Line(0, 1, 1), keep="ge")
        parts = [area_and_centroid(hexagon), area_and_centroid(cap)]
        assert sum(a for a, _ in parts) == 7
        cen = composite_centroid(parts)
        assert (cen.x, cen.y) == (0, F(4, 21))


class TestConvexHull:
    def test_hull_of_hexagon_with_interior_noise(self, canon_hexagon):
        pts = list(canon_hexagon.vertices) + [P(0, 0), P(1, 0), P(F(-1, 2), F(1, 2))]
        hull = convex_hull(pts)
        assert set(hull.vertices) == set(canon_hexagon.vertices)

    def test_collinear_input_rejected(self):
        with pytest.raises(DegenerateInput):
            convex_hull([P(0, 0), P(1, 1), P(2, 2), P(3, 3)])

    @given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
                    min_size=3, max_size=30))
    def test_hull_contains_all_inputs(self, coords):
        pts = [P(x, y) for x, y in coords]
        try:
            hull = convex_hull(pts)
        except DegenerateInput:
            return
        for p in pts:
            assert hull.contains(p)


class TestLines:
    def test_star_outer_vertices(self, canon_hexagon):
        v = canon_hexagon.vertices
        # extend edge a5a6 against edge a2a1
        l1 = Line.through(v[4], v[5])
        l2 = Line.through(v[1], v[0])
        assert line_intersect(l1, l2) == P(3, 1)
        # extend edge a6a1 against edge a3a2
        l3 = Line.through(v[5], v[0])
        l4 = Line.through(v[2], v[1])
        assert line_intersect(l3, l4) == P(0, 2)

    def test_parallel_raises(self):
        with pytest.raises(Parallel):
            line_intersect(Line(0, 1, 0), Line(0, 1, 1))

    def test_side_sign(self):
        l = Line.through(P(0, 0), P(1, 0))
        assert l.side(P(0, 1)) > 0
        assert l.side(P(0, -1)) < 0
        assert l.side(P(5, 0)) == 0

    def test_supporting_cone(self, canon_hexagon):
        l_in, l_out = supporting_cone(canon_hexagon, 0)
        a1 = canon_hexagon.vertices[0]
        assert l_in.side(a1) == 0 and l_out.side(a1) == 0


class TestClip:
    def test_tight_pentagon_clips_to_hexagon(self, tight_pentagon, canon_hexagon):
        got = clip_halfplane(tight_pentagon, Line(0, 1, 1), keep="le")
        assert set(got.vertices) == set(canon_hexagon.vertices)

    def test_clip_away_everything(self, canon_hexagon):
        assert clip_halfplane(canon_hexagon, Line(0, 1, -5), keep="le") is None

    def test_clip_is_identity_when_line_misses(self, canon_hexagon):
        got = clip_halfplane(canon_hexagon, Line(0, 1, 5), keep="le")
        assert set(got.vertices) == set(canon_hexagon.vertices)

    def test_clip_through_vertex(self, canon_hexagon):
        got = clip_halfplane(canon_hexagon, Line(0, 1, 0), keep="ge")
        area, _ = area_and_centroid(got)
        assert area == 3


class TestGaugeHomothet:
    def test_gauge_frozen_values(self, canon_hexagon):
        c = P(0, 0)
        v = canon_hexagon.vertices
        assert gauge(c, v, c) == 0
        assert gauge(c, v, P(2, 0)) == 1
        assert gauge(c, v, P(0, F(4, 21))) == F(4, 21)

    def test_gauge_homogeneous(self, canon_hexagon):
        c = P(0, 0)
        v = canon_hexagon.vertices
        p = P(F(1, 3), F(-2, 7))
        assert gauge(c, v, Point(p.x * 3, p.y * 3)) == 3 * gauge(c, v, p)

    def test_gauge_needs_interior_center(self, canon_hexagon):
        with pytest.raises(DegenerateInput):
            gauge(P(5, 5), canon_hexagon.vertices, P(0, 0))

    def test_homothet_scales_area(self, canon_hexagon):
        small = homothet(canon_hexagon, F(4, 21), P(0, 0))
        area, cen = area_and_centroid(small)
        assert area == 6 * F(4, 21) ** 2
        assert (cen.x, cen.y) == (0, 0)

    def test_homothet_ratio_validated(self, canon_hexagon):
        with pytest.raises(GeomError):
            homothet(canon_hexagon, 0, P(0, 0))


class TestAffineMap:
    def test_roundtrip_inverse(self, canon_hexagon):
        M = AffineMap(F(2), F(1), F(-1), F(3), F(5), F(-2))
        back = M.inverse()
        for v in canon_hexagon.vertices:
            assert back.apply(M.apply(v)) == v

    def test_compose(self):
        A = AffineMap(F(2), F(0), F(0), F(1), F(1), F(0))
        B = AffineMap(F(1), F(1), F(0), F(1), F(0), F(2))
        p = P(3, 4)
        assert A.compose(B).apply(p) == A.apply(B.apply(p))

    def test_from_point_pairs(self):
        src = (P(0, 0), P(1, 0), P(0, 1))
        dst = (P(2, 1), P(4, 2), P(1, 5))
        M = AffineMap.from_point_pairs(src, dst)
        for s, d in zip(src, dst):
            assert M.apply(s) == d

    def test_area_scales_by_det(self, canon_hexagon):
        M = AffineMap(F(2), F(1), F(-1), F(3), F(5), F(-2))
        img = apply_map(M, canon_hexagon)
        area, _ = area_and_centroid(img)
        assert area == 6 * M.det()

    def test_centroid_is_affine_equivariant(self, tight_pentagon):
        M = AffineMap(F(1), F(2), F(0), F(1), F(-3), F(7))
        _, cen = area_and_centroid(tight_pentagon)
        _, cen_img = area_and_centroid(apply_map(M, tight_pentagon))
        assert cen_img == M.apply(cen)


class TestBoundaryDistance:
    def test_vertex_and_interior(self, canon_hexagon):
        assert boundary_distance(canon_hexagon, P(2, 0)) == 0
        assert boundary_distance(canon_hexagon, P(0, 0)) == pytest.approx(1.0)


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
                min_size=3, max_size=12))
def test_hull_area_matches_triangulation(coords):
    pts = [P(x, y) for x, y in coords]
    try:
        hull = convex_hull(pts)
    except DegenerateInput:
        return
    area, _ = area_and_centroid(hull)
    v = hull.vertices
    fan = sum(cross3(v[0], v[i], v[i + 1]) for i in range(1, len(v) - 1))
    assert area == F(fan, 2)
