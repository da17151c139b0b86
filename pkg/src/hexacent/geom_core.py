"""Exact-and-floating planar geometry kernel.

Coordinates are either all fractions.Fraction (exact mode) or all float
(floating mode); the mode is a property of each object and mixing modes
inside one polygon is rejected.
"""

import math
from fractions import Fraction


class GeomError(Exception): ...


class DegenerateInput(GeomError): ...


class NonConvex(GeomError):
    def __init__(self, triple, indices):
        self.triple = triple
        self.indices = indices
        shown = ", ".join("(%s, %s)" % (x, y) for x, y in triple)
        super().__init__(
            "vertex triple %s at indices %s turns the wrong way"
            % (shown, indices))


class Parallel(GeomError): ...


class SingularMap(GeomError): ...


class EmptyInput(GeomError): ...


class NonPositiveRatio(GeomError): ...


def _is_exact(x):
    return isinstance(x, (Fraction, int))


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def __add__(self, o):
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, s):
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def cross(self, o):
        return self.x * o.y - self.y * o.x

    def dot(self, o):
        return self.x * o.x + self.y * o.y

    def __eq__(self, o):
        return isinstance(o, Point) and self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return "Point(%s, %s)" % (self.x, self.y)

    @property
    def exact(self):
        return _is_exact(self.x) and _is_exact(self.y)


def cross3(a, b, c):
    """Cross product of (b-a) and (c-a); >0 means left turn."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


class Line:
    """a*x + b*y = c with (a,b) != (0,0)."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        if a == 0 and b == 0:
            raise DegenerateInput("line with zero normal")
        self.a = a
        self.b = b
        self.c = c

    @classmethod
    def through(cls, p, q):
        """Line through p and q; points left of p->q get side() > 0."""
        if p == q:
            raise DegenerateInput("line through coincident points")
        a, b = p.y - q.y, q.x - p.x
        return cls(a, b, a * p.x + b * p.y)

    def side(self, p):
        """a*x + b*y - c: 0 on the line, sign tells the half-plane."""
        return self.a * p.x + self.b * p.y - self.c

    def __repr__(self):
        return "Line(%s, %s, %s)" % (self.a, self.b, self.c)


def line_intersect(l1, l2, tol=0.0):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        raise Parallel("parallel lines")
    if tol and not _is_exact(det):
        scale = max(abs(l1.a), abs(l1.b), abs(l2.a), abs(l2.b)) ** 2
        if abs(det) <= tol * scale:
            raise Parallel("nearly parallel lines")
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    return Point(x, y)


class ConvexPolygon:
    """Ordered CCW vertex list; convex, no repeated or collinear vertices."""

    __slots__ = ("vertices", "exact")

    def __init__(self, vertices, _trust=False):
        pts = list(vertices)
        if len(pts) < 3:
            raise DegenerateInput("need at least 3 vertices")
        exact = pts[0].exact
        for p in pts:
            if p.exact != exact:
                raise GeomError("mixed exact/floating coordinates in one polygon")
        self.exact = exact
        if _trust:
            self.vertices = pts
            return

        # normalize to CCW
        area2 = _signed_area2(pts)
        if area2 < 0:
            pts.reverse()
            area2 = -area2
        if area2 == 0:
            raise DegenerateInput("zero-area polygon")

        pts = self._prune(pts)
        if len(pts) < 3:
            raise DegenerateInput("polygon collapses after pruning")

        n = len(pts)
        for i in range(n):
            a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
            if cross3(a, b, c) <= 0:
                raise NonConvex((tuple(a), tuple(b), tuple(c)),
                                (i, (i + 1) % n, (i + 2) % n))
        self.vertices = pts

    def _prune(self, pts):
        # drop duplicate and collinear vertices; exact zero test in rational
        # mode, 1e-12 * diam^2 tolerance in floating mode
        if self.exact:
            tol2 = 0
        else:
            d = _diameter(pts)
            tol2 = 1e-12 * d * d
        out = []
        n = len(pts)
        for i in range(n):
            p = pts[i]
            if out and p == out[-1]:
                continue
            out.append(p)
        if len(out) > 1 and out[0] == out[-1]:
            out.pop()
        # collinearity must be re-tested against the surviving neighbor
        # after each removal: two near-duplicate points each look
        # collinear w.r.t. the other, and a stale-neighbor pass would
        # drop both instead of merging them
        def flat(a, b, c):
            cr = cross3(a, b, c)
            return cr == 0 if tol2 == 0 else abs(cr) <= tol2

        changed = True
        while changed and len(out) > 2:
            changed = False
            keep = []
            for b in out:
                while len(keep) >= 2 and flat(keep[-2], keep[-1], b):
                    keep.pop()
                    changed = True
                keep.append(b)
            while len(keep) > 2 and flat(keep[-2], keep[-1], keep[0]):
                keep.pop()
                changed = True
            while len(keep) > 2 and flat(keep[-1], keep[0], keep[1]):
                keep.pop(0)
                changed = True
            out = keep
        return out

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return "ConvexPolygon(%d vertices, %s)" % (
            len(self.vertices), "exact" if self.exact else "float")

    def diameter(self):
        return _diameter(self.vertices)

    def contains(self, p, tol=0.0):
        """Closed containment; tol is an absolute slack on the edge tests."""
        n = len(self.vertices)
        for i in range(n):
            if cross3(self.vertices[i], self.vertices[(i + 1) % n], p) < -tol:
                return False
        return True


def _signed_area2(pts):
    n = len(pts)
    s = 0
    for i in range(n):
        s += pts[i].cross(pts[(i + 1) % n])
    return s


def _diameter(pts):
    best = 0.0
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            dx = float(pts[i].x) - float(pts[j].x)
            dy = float(pts[i].y) - float(pts[j].y)
            d = math.hypot(dx, dy)
            if d > best:
                best = d
    return best


def polygon_area2(pts):
    """Twice the signed area of a (possibly non-convex) simple polygon."""
    return _signed_area2(list(pts))


def area_and_centroid(poly):
    """Shoelace area and area centroid; exact in rational mode."""
    pts = poly.vertices if isinstance(poly, ConvexPolygon) else list(poly)
    n = len(pts)
    a2 = 0
    sx = 0
    sy = 0
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        cr = p.cross(q)
        a2 += cr
        sx += (p.x + q.x) * cr
        sy += (p.y + q.y) * cr
    if a2 == 0:
        raise DegenerateInput("zero-area polygon")
    area = a2 / 2 if isinstance(a2, Fraction) else _half(a2)
    return area, Point(sx / (3 * a2), sy / (3 * a2))


def _half(v):
    if isinstance(v, int):
        return Fraction(v, 2)
    return v / 2


def composite_centroid(parts):
    """Area-weighted centroid of disjoint pieces: ((area, centroid), ...)."""
    parts = list(parts)
    if not parts:
        raise EmptyInput("no parts")
    total = 0
    sx = 0
    sy = 0
    for area, cen in parts:
        if area <= 0:
            raise GeomError("nonpositive part area")
        total += area
        sx += area * cen.x
        sy += area * cen.y
    return Point(sx / total, sy / total)


def convex_hull(points):
    """Andrew monotone chain; collinear boundary points pruned."""
    pts = sorted(set((p.x, p.y) for p in points))
    if len(pts) < 3:
        raise DegenerateInput("fewer than 3 distinct points")
    pts = [Point(x, y) for x, y in pts]

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross3(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all points collinear")
    return ConvexPolygon(hull)


def clip_halfplane(poly, line, keep="le"):
    """Intersection of poly with {side <= 0} ('le') or {side >= 0} ('ge').

    Returns a ConvexPolygon, or None when the intersection has zero area.
    """
    sign = 1 if keep == "le" else -1
    pts = poly.vertices
    n = len(pts)
    out = []
    sides = [sign * line.side(p) for p in pts]
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        sp, sq = sides[i], sides[(i + 1) % n]
        if sp <= 0:
            out.append(p)
        if (sp < 0 < sq) or (sq < 0 < sp):
            t = sp / (sp - sq)
            out.append(Point(p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t))
    if len(out) < 3:
        return None
    try:
        return ConvexPolygon(out)
    except DegenerateInput:
        return None


def homothet(poly, ratio, center):
    if ratio <= 0:
        raise NonPositiveRatio("ratio must be > 0")
    return ConvexPolygon(
        [Point(center.x + ratio * (v.x - center.x),
               center.y + ratio * (v.y - center.y)) for v in poly.vertices],
        _trust=True)


def gauge(center, vertices, p):
    """Minkowski gauge of p w.r.t. the convex polygon (center, vertices).

    Smallest t >= 0 with p in center + t*(poly - center).  Exact for
    rational inputs.  gauge(center) = 0; vertices are at gauge 1.
    """
    n = len(vertices)
    best = 0
    for i in range(n):
        va, vb = vertices[i], vertices[(i + 1) % n]
        # outward normal of the centered edge
        ex, ey = vb.x - va.x, vb.y - va.y
        nx, ny = ey, -ex
        h = nx * (va.x - center.x) + ny * (va.y - center.y)
        if h <= 0:
            raise DegenerateInput("center not interior to polygon")
        val = (nx * (p.x - center.x) + ny * (p.y - center.y)) / h
        if val > best:
            best = val
    return best


class AffineMap:
    """x -> (m11*x + m12*y + tx, m21*x + m22*y + ty)."""

    __slots__ = ("m11", "m12", "m21", "m22", "tx", "ty")

    def __init__(self, m11, m12, m21, m22, tx, ty):
        if m11 * m22 - m12 * m21 == 0:
            raise SingularMap("determinant is zero")
        self.m11, self.m12, self.m21, self.m22 = m11, m12, m21, m22
        self.tx, self.ty = tx, ty

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1, 0, 0)

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, p):
        return Point(self.m11 * p.x + self.m12 * p.y + self.tx,
                     self.m21 * p.x + self.m22 * p.y + self.ty)

    def apply_vec(self, p):
        return Point(self.m11 * p.x + self.m12 * p.y,
                     self.m21 * p.x + self.m22 * p.y)

    def inverse(self):
        d = self.det()
        i11, i12 = self.m22 / d, -self.m12 / d
        i21, i22 = -self.m21 / d, self.m11 / d
        return AffineMap(i11, i12, i21, i22,
                         -(i11 * self.tx + i12 * self.ty),
                         -(i21 * self.tx + i22 * self.ty))

    def compose(self, other):
        """self after other."""
        return AffineMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            self.m11 * other.tx + self.m12 * other.ty + self.tx,
            self.m21 * other.tx + self.m22 * other.ty + self.ty)

    @classmethod
    def from_point_pairs(cls, src, dst):
        """Affine map sending three src points to three dst points."""
        (s0, s1, s2), (d0, d1, d2) = src, dst
        e1, e2 = s1 - s0, s2 - s0
        det = e1.cross(e2)
        if det == 0:
            raise SingularMap("source points collinear")
        f1, f2 = d1 - d0, d2 - d0
        # columns of the linear part solve M*e_i = f_i
        m11 = (f1.x * e2.y - f2.x * e1.y) / det
        m12 = (f2.x * e1.x - f1.x * e2.x) / det
        m21 = (f1.y * e2.y - f2.y * e1.y) / det
        m22 = (f2.y * e1.x - f1.y * e2.x) / det
        tx = d0.x - (m11 * s0.x + m12 * s0.y)
        ty = d0.y - (m21 * s0.x + m22 * s0.y)
        return cls(m11, m12, m21, m22, tx, ty)


def apply_map(M, poly):
    pts = [M.apply(v) for v in poly.vertices]
    return ConvexPolygon(pts)


def supporting_cone(poly, i):
    """The two extreme supporting lines at vertex i: (line through
    v[i-1]v[i], line through v[i]v[i+1])."""
    n = len(poly.vertices)
    v = poly.vertices
    return (Line.through(v[(i - 1) % n], v[i]),
            Line.through(v[i], v[(i + 1) % n]))


def point_segment_dist(p, a, b):
    ax, ay = float(a.x), float(a.y)
    bx, by = float(b.x), float(b.y)
    px, py = float(p.x), float(p.y)
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    if L2 == 0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / L2
    t = 0.0 if t < 0 else (1.0 if t > 1 else t)
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def boundary_distance(poly, p):
    """Distance from p to the polygon's boundary (min over edges)."""
    v = poly.vertices
    n = len(v)
    return min(point_segment_dist(p, v[i], v[(i + 1) % n]) for i in range(n))
