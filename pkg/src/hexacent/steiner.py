"""Steiner symmetrization of convex polygons about an arbitrary line.

Every chord perpendicular to the axis is slid so its midpoint lands on the
axis.  Area is preserved exactly in rational mode, the result is convex and
mirror-symmetric about the axis, and its centroid lies on the axis.
"""

from .geom_core import ConvexPolygon, DegenerateInput, Point


def _to_axis_frame(axis, p):
    # rotate/scale so the axis becomes {y = 0}; a similarity, so chords
    # perpendicular to the axis become vertical
    a, b, c = axis.a, axis.b, axis.c
    return Point(b * p.x - a * p.y, a * p.x + b * p.y - c)


def _from_axis_frame(axis, p):
    a, b, c = axis.a, axis.b, axis.c
    n2 = a * a + b * b
    y = p.y + c
    return Point((b * p.x + a * y) / n2, (-a * p.x + b * y) / n2)


def _vertical_extent(pts, x):
    """Min and max y of the polygon boundary on the vertical line at x."""
    lo = hi = None
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        if p.x == q.x:
            if p.x != x:
                continue
            ys = (p.y, q.y)
        elif min(p.x, q.x) <= x <= max(p.x, q.x):
            t = (x - p.x) / (q.x - p.x)
            ys = (p.y + t * (q.y - p.y),)
        else:
            continue
        for y in ys:
            if lo is None or y < lo:
                lo = y
            if hi is None or y > hi:
                hi = y
    if lo is None:
        raise DegenerateInput("vertical line misses the polygon")
    return lo, hi


def symmetrize(poly, axis):
    """Steiner symmetral of poly about the line axis."""
    pts = [_to_axis_frame(axis, v) for v in poly.vertices]
    xs = sorted(set(p.x for p in pts))
    halves = []
    for x in xs:
        lo, hi = _vertical_extent(pts, x)
        halves.append((hi - lo) / 2)
    top = [Point(x, h) for x, h in zip(xs, halves)]
    bottom = [Point(x, -h) for x, h in zip(reversed(xs), reversed(halves))]
    sym = ConvexPolygon(top + bottom)
    return ConvexPolygon([_from_axis_frame(axis, v) for v in sym.vertices])
