from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexacent.proof_verifier.bipoly import BiPoly, UniPoly
from hexacent.proof_verifier.certify import (
    Region,
    certify_sign,
    critical_points,
)

F = Fraction
W = BiPoly.w()
Z = BiPoly.z()


class TestRegion:
    def test_box_normalizes_to_fractions(self):
        r = Region.box(1, 2, F(5, 7), 1)
        assert r.kind == "box"
        assert r.data == (1, 2, F(5, 7), 1)
        assert all(isinstance(v, Fraction) for v in r.data)

    def test_degenerate_regions_rejected(self):
        with pytest.raises(ValueError):
            Region.box(1, 1, 0, 1)
        with pytest.raises(ValueError):
            Region.interval(2, 2)
        with pytest.raises(ValueError):
            Region.triangle((0, 0), (1, 1), (2, 2))

    def test_triangle_orientation_normalized(self):
        a = Region.triangle((0, 0), (1, 0), (0, 1))
        b = Region.triangle((0, 0), (0, 1), (1, 0))
        assert a.data == b.data


class TestIntervalCertificates:
    def test_strict_positive(self):
        p = UniPoly([F(1), F(0), F(1)])  # 1 + x^2
        cert = certify_sign(p, Region.interval(-3, 3), ">0")
        assert cert.status == "Proved"
        assert cert.max_depth <= 30

    def test_weak_with_boundary_zero(self):
        p = UniPoly([F(-2), F(1)])  # x - 2, zero at the right endpoint
        cert = certify_sign(p, Region.interval(1, 2), "<=0")
        assert cert.status == "Proved"

    def test_disproved_with_exact_witness(self):
        p = UniPoly([F(-4), F(-2), F(1), F(1)])  # root inside [1, 2]
        cert = certify_sign(p, Region.interval(1, 2), "<0")
        assert cert.status == "Disproved"
        pt, val = cert.witness
        assert p(pt[0]) == val and val >= 0

    def test_witness_value_rechecks(self):
        p = UniPoly([F(1), F(-1)])  # 1 - x, negative for x > 1
        cert = certify_sign(p, Region.interval(2, 3), ">=0")
        assert cert.status == "Disproved"
        (x,), val = cert.witness
        assert val == 1 - x < 0

    def test_endpoint_zero_disproves_strict(self):
        # x - 2 < 0 fails at the right endpoint, caught by sampling
        p = UniPoly([F(-2), F(1)])
        cert = certify_sign(p, Region.interval(1, 2), "<0")
        assert cert.status == "Disproved"
        assert cert.witness == ((F(2),), F(0))

    def test_budget_exhaustion_is_inconclusive(self):
        # true but with a thin margin: one box is not enough
        p = UniPoly([F(9, 4) + F(1, 10 ** 6), F(-3), F(1)])  # (x-3/2)^2+eps
        cert = certify_sign(p, Region.interval(1, 2), ">0", budget=1)
        assert cert.status == "Inconclusive"
        assert cert.boxes_examined <= 1

    def test_depth_exhaustion_is_inconclusive(self):
        p = UniPoly([F(9, 4) + F(1, 10 ** 6), F(-3), F(1)])
        cert = certify_sign(p, Region.interval(1, 2), ">0", max_depth=0)
        assert cert.status == "Inconclusive"
        assert cert.max_depth == 0


class TestBoxCertificates:
    def test_strict_positive_product(self):
        p = (W * W + 1) * (Z * Z + 1)
        cert = certify_sign(p, Region.box(-1, 1, -1, 1), ">0")
        assert cert.status == "Proved"

    def test_needs_subdivision(self):
        # positive on the box but with small margin near a corner
        p = (W - 2) * (W - 2) + (Z - 1) * (Z - 1) + BiPoly.const(F(1, 100))
        cert = certify_sign(p, Region.box(1, 2, 0, 1), ">0")
        assert cert.status == "Proved"
        assert cert.boxes_examined >= 1

    def test_disproved_inside_box(self):
        p = W + Z - 3  # changes sign across the box
        cert = certify_sign(p, Region.box(1, 2, 0, 1), "<0")
        assert cert.status == "Disproved"
        (wv, zv), val = cert.witness
        assert p(wv, zv) == val and val >= 0

    def test_unknown_relation_rejected(self):
        with pytest.raises(ValueError):
            certify_sign(W, Region.box(1, 2, 0, 1), "!=0")


class TestTriangleCertificates:
    def test_strict_negative_on_triangle(self):
        p = W + Z - 4  # max over the triangle is -4/7 < 0 at (2, 10/7)
        tri = Region.triangle((2, 1), (F(8, 5), 1), (2, F(10, 7)))
        cert = certify_sign(p, tri, "<0")
        assert cert.status == "Proved"

    def test_sign_flip_on_triangle_disproved(self):
        p = W - Z - 1
        tri = Region.triangle((0, 0), (4, 0), (0, 4))
        cert = certify_sign(p, tri, ">0")
        assert cert.status == "Disproved"

    def test_value_off_triangle_does_not_matter(self):
        # p dips negative at the bbox corner (0, 1) outside the triangle;
        # subdivision discards boxes disjoint from the triangle
        p = W - Z + F(1, 10)
        tri = Region.triangle((0, 0), (1, 0), (1, 1))
        cert = certify_sign(p, tri, ">0")
        assert cert.status == "Proved"

    def test_zero_edge_weak_relation_stays_sound(self):
        # p vanishes on a slanted triangle edge: the box cover can neither
        # prove the weak relation nor produce a witness, so it must end
        # Inconclusive rather than claim either verdict
        p = W - Z
        tri = Region.triangle((0, 0), (1, 0), (1, 1))
        cert = certify_sign(p, tri, ">=0", max_depth=8)
        assert cert.status == "Inconclusive"
        assert cert.witness is None


class TestCriticalPoints:
    def test_saddle_free_quadratic(self):
        p = (W - F(3, 2)) ** 2 + (Z - F(1, 2)) ** 2
        got = critical_points(p, Region.box(1, 2, 0, 1))
        assert len(got["interior"]) == 1
        wv, zv, val = got["interior"][0]
        assert abs(wv - 1.5) < 1e-9 and abs(zv - 0.5) < 1e-9
        assert abs(val) < 1e-9

    def test_maximum_reported_over_all_candidates(self):
        p = -((W - F(3, 2)) ** 2) - (Z - F(1, 2)) ** 2
        got = critical_points(p, Region.box(1, 2, 0, 1))
        wv, zv, val = got["maximum"]
        assert abs(wv - 1.5) < 1e-9 and abs(zv - 0.5) < 1e-9
        assert abs(val) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=10),
       st.fractions(min_value=-3, max_value=3, max_denominator=10))
def test_linear_sign_certificates_match_truth(a, b):
    # p = (w - a) + (z - b) on a box strictly right of the zero line
    p = (W - a) + (Z - b)
    lo = a + b
    cert = certify_sign(p, Region.box(lo + 1, lo + 2, 0, 1), ">0")
    assert cert.status == "Proved"
