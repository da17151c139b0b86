from fractions import Fraction

import pytest

from hexacent.geom_core import ConvexPolygon, Point


def F(a, b=1):
    return Fraction(a, b)


CANON_VERTS = [(1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1), (2, 0)]
TIGHT_VERTS = [(0, 2), (-2, 0), (-1, -1), (1, -1), (2, 0)]


@pytest.fixture
def canon_hexagon():
    return ConvexPolygon([Point(F(x), F(y)) for x, y in CANON_VERTS])


@pytest.fixture
def tight_pentagon():
    return ConvexPolygon([Point(F(x), F(y)) for x, y in TIGHT_VERTS])
