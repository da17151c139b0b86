"""Affine-regular hexagons and their inscription in convex bodies.

An affine-regular hexagon is an affine image of the regular hexagon.  It is
determined by a center c and two adjacent vertex offsets u, v; the vertices
are c+u, c+v, c+v-u, c-u, c-v, c+u-v in CCW order.

Inscription works chord-wise.  Fix a direction and look at the chords of the
body parallel to it: two "edge" chords of equal length 2s at levels y1 < y2
plus the chord at the middle level (y1+y2)/2, which must be twice as long.
The length condition pins s for each direction; rotating the direction until
the three chord midpoints align yields the hexagon.  A half turn flips the
sign of the misalignment, so a zero of it always exists.
"""

import math
from bisect import bisect_left
from dataclasses import dataclass

from .geom_core import (
    ConvexPolygon,
    DegenerateInput,
    GeomError,
    Point,
    boundary_distance,
)


class InscriptionFailed(GeomError): ...


class ThinBody(InscriptionFailed): ...


CANONICAL_U = (1, 1)
CANONICAL_V = (-1, 1)


class AffineRegularHexagon:
    __slots__ = ("c", "u", "v")

    def __init__(self, c, u, v):
        cr = u.cross(v)
        if cr == 0:
            raise DegenerateInput("hexagon offsets are collinear")
        if cr < 0:
            u, v = v, u
        self.c = c
        self.u = u
        self.v = v

    @property
    def vertices(self):
        c, u, v = self.c, self.u, self.v
        return [c + u, c + v, c + v - u, c - u, c - v, c + u - v]

    def area(self):
        return 3 * self.u.cross(self.v)

    def polygon(self):
        return ConvexPolygon(self.vertices)

    def outer_vertices(self):
        """Tips of the hexagram obtained by extending alternate edges.

        Tip i lies beyond edge (a_{i-1}, a_i) and equals a_{i-1} + a_i - c.
        """
        a = self.vertices
        return [a[i - 1] + a[i] - self.c for i in range(6)]

    def star_vertices(self):
        """The hexagram as a 12-gon cycle: vertices and tips interleaved.

        The star is not convex, so this is a plain point list in CCW order.
        """
        a = self.vertices
        t = self.outer_vertices()
        out = []
        for i in range(6):
            out.append(a[i])
            out.append(t[(i + 1) % 6])
        return out

    def wing_triangles(self):
        """The six tip triangles (a_{i-1}, tip_i, a_i) of the hexagram."""
        a = self.vertices
        t = self.outer_vertices()
        return [(a[i - 1], t[i], a[i]) for i in range(6)]

    def to_canonical(self):
        """Affine map taking this hexagon onto the canonical one."""
        from .geom_core import AffineMap

        c, u, v = self.c, self.u, self.v
        src = (c, c + u, c + v)
        dst = (Point(0, 0), Point(*CANONICAL_U), Point(*CANONICAL_V))
        return AffineMap.from_point_pairs(src, dst)

    def __repr__(self):
        return "AffineRegularHexagon(c=%r, u=%r, v=%r)" % (self.c, self.u, self.v)


@dataclass(frozen=True)
class HexagonFit:
    hexagon: AffineRegularHexagon
    angle: float
    edge_half_length: float
    alignment_error: float
    residual: float


def _interp(ys, xs, y):
    # piecewise-linear interpolation on increasing ys, clamped at the ends
    if y <= ys[0]:
        return xs[0]
    if y >= ys[-1]:
        return xs[-1]
    i = bisect_left(ys, y)
    if ys[i] == y:
        return xs[i]
    t = (y - ys[i - 1]) / (ys[i] - ys[i - 1])
    return xs[i - 1] + t * (xs[i] - xs[i - 1])


def _snap(vals, tol):
    """Collapse values closer than tol to a common representative.

    Chord directions parallel to an edge must see that edge as an exactly
    flat plateau; without snapping, rounding in cos/sin leaves a 1-ulp tilt
    and the slack logic never fires.
    """
    order = sorted(set(vals))
    rep = {}
    group = order[0]
    prev = order[0]
    for v in order:
        if v - prev > tol:
            group = v
        rep[v] = group
        prev = v
    return [rep[v] for v in vals]


class _Frame:
    """Chord table of a convex polygon against horizontal lines."""

    def __init__(self, qx, qy, snap_tol=0.0):
        if snap_tol > 0:
            qy = _snap(qy, snap_tol)
        n = len(qx)
        ibr = min(range(n), key=lambda i: (qy[i], -qx[i]))
        itr = max(range(n), key=lambda i: (qy[i], qx[i]))
        itl = max(range(n), key=lambda i: (qy[i], -qx[i]))
        ibl = min(range(n), key=lambda i: (qy[i], qx[i]))

        def walk(start, stop):
            out = [start]
            i = start
            while i != stop:
                i = (i + 1) % n
                out.append(i)
                if len(out) > n:
                    raise InscriptionFailed("chain walk did not terminate")
            return out

        def compress(idx, keep_max_x):
            ys, xs = [], []
            for i in idx:
                y, x = qy[i], qx[i]
                if ys and y == ys[-1]:
                    if (x > xs[-1]) == keep_max_x:
                        xs[-1] = x
                    continue
                if ys and y < ys[-1]:
                    raise InscriptionFailed("chain not monotone")
                ys.append(y)
                xs.append(x)
            return ys, xs

        self.ry, self.rx = compress(walk(ibr, itr), keep_max_x=True)
        left = walk(itl, ibl)
        left.reverse()
        self.ly, self.lx = compress(left, keep_max_x=False)

        ys_all = sorted(set(self.ry) | set(self.ly))
        ell = []
        for y in ys_all:
            L = max(0.0, self.right(y) - self.left(y))
            ell.append(L)
        self.ys = ys_all
        self.ell = ell
        self.imax = max(range(len(ell)), key=lambda i: (ell[i], -i))
        self.jmax = max(range(len(ell)), key=lambda i: (ell[i], i))
        self.ell_max = ell[self.imax]

    def right(self, y):
        return _interp(self.ry, self.rx, y)

    def left(self, y):
        return _interp(self.ly, self.lx, y)

    def chord_len(self, y):
        return max(0.0, _interp(self.ys, self.ell, y))

    def level_low(self, target):
        """Smallest y with chord_len >= target (clamped at the bottom)."""
        ys, ell = self.ys, self.ell
        if target <= ell[0]:
            return ys[0]
        i = bisect_left(ell, target, 0, self.imax + 1)
        if ell[i] == target:
            return ys[i]
        t = (target - ell[i - 1]) / (ell[i] - ell[i - 1])
        return ys[i - 1] + t * (ys[i] - ys[i - 1])

    def level_high(self, target):
        """Largest y with chord_len >= target (clamped at the top)."""
        ys, ell = self.ys, self.ell
        if target <= ell[-1]:
            return ys[-1]
        lo, hi = self.jmax, len(ell) - 1
        # ell decreasing on [jmax, end]; bisect for the crossing segment
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if ell[mid] >= target:
                lo = mid
            else:
                hi = mid
        if ell[lo] == target:
            return ys[lo]
        t = (target - ell[lo]) / (ell[hi] - ell[lo])
        return ys[lo] + t * (ys[hi] - ys[lo])


def _solve_levels(fr, diam):
    """Find s with chord_len((y1+y2)/2) = 4s where y1, y2 bound {len >= 2s}."""

    def H(s):
        y1 = fr.level_low(2 * s)
        y2 = fr.level_high(2 * s)
        return fr.chord_len((y1 + y2) / 2) - 4 * s, y1, y2

    lo, hi = 0.0, fr.ell_max / 2
    flo, y1, y2 = H(lo)
    if flo <= 0:
        # already matched at the degenerate end; only possible within noise
        return lo, y1, y2
    fhi = H(hi)[0]
    if fhi >= 0:
        raise InscriptionFailed("length equation has no sign change")
    tol = 1e-13 * diam
    prev_s, prev_f = lo, flo
    s, f = hi, fhi
    for _ in range(200):
        if hi - lo <= tol:
            break
        if f != prev_f:
            cand = s - f * (s - prev_s) / (f - prev_f)
        else:
            cand = (lo + hi) / 2
        if not (lo + 0.1 * (hi - lo) <= cand <= hi - 0.1 * (hi - lo)):
            cand = (lo + hi) / 2
        fc, y1c, y2c = H(cand)
        prev_s, prev_f = s, f
        s, f = cand, fc
        if fc > 0:
            lo = cand
        elif fc < 0:
            hi = cand
        else:
            return cand, y1c, y2c
        if abs(fc) <= tol:
            return cand, y1c, y2c
    s = (lo + hi) / 2
    _, y1, y2 = H(s)
    return s, y1, y2


def _alignment(poly_xy, theta, diam):
    """Misalignment of the three chord midpoints at direction theta.

    Returns (g, data): g is the signed distance after plateau slack has been
    used up, so g = 0 means a hexagon exists at this angle.
    """
    xs0, ys0 = poly_xy
    ct, st = math.cos(theta), math.sin(theta)
    qx = [x * ct + y * st for x, y in zip(xs0, ys0)]
    qy = [-x * st + y * ct for x, y in zip(xs0, ys0)]
    fr = _Frame(qx, qy, snap_tol=1e-12 * diam)
    s, y1, y2 = _solve_levels(fr, diam)
    m = (y1 + y2) / 2

    def mid_and_slack(y):
        lft, rgt = fr.left(y), fr.right(y)
        return (lft + rgt) / 2, max(0.0, (rgt - lft - 2 * s) / 2)

    xt, sig_t = mid_and_slack(y2)
    xb, sig_b = mid_and_slack(y1)
    xm = (fr.left(m) + fr.right(m)) / 2
    delta = xm - (xt + xb) / 2
    slack = (sig_t + sig_b) / 2
    if delta > slack:
        g = delta - slack
    elif delta < -slack:
        g = delta + slack
    else:
        g = 0.0
    return g, (s, y1, y2, m, xt, sig_t, xb, sig_b, xm)


def _clamp(x, lo, hi):
    return lo if x < lo else (hi if x > hi else x)


def _build_fit(poly, theta, g, data, diam):
    s, y1, y2, m, xt, sig_t, xb, sig_b, xm = data
    want = 2 * (xm - (xt + xb) / 2)
    dt = _clamp(want, -sig_t, sig_t)
    db = _clamp(want - dt, -sig_b, sig_b)
    xt += dt
    xb += db
    cx = (xt + xb) / 2
    ct, st = math.cos(theta), math.sin(theta)

    def back(x, y):
        return Point(x * ct - y * st, x * st + y * ct)

    c = back(cx, m)
    u = back(xt + s - cx, y2 - m)
    v = back(xt - s - cx, y2 - m)
    hexagon = AffineRegularHexagon(c, u, v)
    residual = max(boundary_distance(poly, p) for p in hexagon.vertices)
    if residual > 1e-7 * diam:
        raise InscriptionFailed(
            "inscribed hexagon misses the boundary by %.3g (diam %.3g)"
            % (residual, diam))
    return HexagonFit(hexagon=hexagon, angle=theta, edge_half_length=s,
                      alignment_error=abs(g), residual=residual)


def inscribe(poly, n_angles=64):
    """Inscribe an affine-regular hexagon in a convex polygon.

    All six hexagon vertices land on the boundary of poly (up to a relative
    residual of 1e-7 of the diameter).  The smallest direction angle in
    [0, pi] that admits a hexagon is preferred.  Bodies with width below
    1e-6 of the diameter are rejected as too thin.
    """
    if not isinstance(poly, ConvexPolygon):
        raise GeomError("inscribe expects a ConvexPolygon")
    if poly.exact:
        poly = ConvexPolygon([Point(float(v.x), float(v.y))
                              for v in poly.vertices])
    diam = poly.diameter()
    if _min_width(poly) < 1e-6 * diam:
        raise ThinBody("body is too thin to inscribe reliably")
    xs0 = [v.x for v in poly.vertices]
    ys0 = [v.y for v in poly.vertices]
    poly_xy = (xs0, ys0)
    tol_g = 1e-10 * diam

    evals = {}

    def g_at(theta):
        if theta not in evals:
            evals[theta] = _alignment(poly_xy, theta, diam)
        return evals[theta]

    thetas = [k * math.pi / n_angles for k in range(n_angles + 1)]
    brackets = []
    prev_t = None
    prev_g = None
    for t in thetas:
        g, data = g_at(t)
        if abs(g) <= tol_g:
            return _build_fit(poly, t, g, data, diam)
        if prev_g is not None and (g > 0) != (prev_g > 0):
            brackets.append((prev_t, t))
        prev_t, prev_g = t, g

    if not brackets:
        raise InscriptionFailed("no sign change found in the angle scan")

    for ta, tb in brackets:
        hit = _refine_bracket(g_at, ta, tb, tol_g)
        if hit is not None:
            t, g, data = hit
            return _build_fit(poly, t, g, data, diam)
    raise InscriptionFailed("angle refinement did not converge")


def _refine_bracket(g_at, a, b, tol):
    fa = g_at(a)[0]
    fb = g_at(b)[0]
    best = None
    side = 0
    for _ in range(120):
        if fb != fa:
            x = b - fb * (b - a) / (fb - fa)
        else:
            x = (a + b) / 2
        if not (a < x < b):
            x = (a + b) / 2
        fx, data = g_at(x)
        if best is None or abs(fx) < abs(best[1]):
            best = (x, fx, data)
        if abs(fx) <= tol:
            return x, fx, data
        if (fx > 0) == (fb > 0):
            b, fb = x, fx
            if side == 1:
                fa /= 2
            side = 1
        else:
            a, fa = x, fx
            if side == -1:
                fb /= 2
            side = -1
        if b - a < 1e-15:
            break
    if best is not None and abs(best[1]) <= 64 * tol:
        return best
    return None


def _min_width(poly):
    v = poly.vertices
    n = len(v)
    best = math.inf
    for i in range(n):
        p, q = v[i], v[(i + 1) % n]
        ex, ey = q.x - p.x, q.y - p.y
        L = math.hypot(ex, ey)
        if L == 0:
            continue
        h = max(abs((w.x - p.x) * ey - (w.y - p.y) * ex) for w in v) / L
        best = min(best, h)
    return best
