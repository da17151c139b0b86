import re

from hexacent.centroid_bound import RATIO, canonical_hexagon, tight_pentagon
from hexacent.geom_core import ConvexPolygon, Point
from hexacent.hexagon import inscribe
from hexacent.svg import render_svg


def _tight_svg(**overlays):
    body = tight_pentagon()
    hexa = canonical_hexagon()
    return render_svg(body, hexa, ratio=RATIO, **overlays)


class TestDeterminism:
    def test_byte_identical_rerenders(self):
        a = _tight_svg(show_hexagon=True, show_star=True, show_centroid=True)
        b = _tight_svg(show_hexagon=True, show_star=True, show_centroid=True)
        assert a == b

    def test_no_timestamps_or_volatile_ids(self):
        svg = _tight_svg(show_hexagon=True, show_star=True,
                         show_centroid=True)
        assert not re.search(r"\d{4}-\d{2}-\d{2}", svg)
        assert "date" not in svg.lower()
        assert "0x" not in svg


class TestStructure:
    def test_canvas_size(self):
        svg = _tight_svg()
        assert 'width="800"' in svg and 'height="450"' in svg

    def test_one_path_per_overlay(self):
        base = _tight_svg()
        assert base.count("<path") == 1  # body outline only
        svg = _tight_svg(show_hexagon=True, show_star=True,
                         show_centroid=True)
        # body + star + hexagon + scaled-copy region
        assert svg.count("<path") == 4

    def test_overlays_togglable(self):
        svg = _tight_svg(show_star=True)
        assert svg.count("<path") == 2
        assert "centroid-marker" not in svg

    def test_exactly_one_centroid_marker(self):
        svg = _tight_svg(show_centroid=True)
        assert svg.count("centroid-marker") == 1
        assert svg.count("<circle") == 1

    def test_centroid_marker_world_coordinates_exact(self):
        svg = _tight_svg(show_hexagon=True, show_star=True,
                         show_centroid=True)
        m = re.search(r'data-world="([^"]+)"', svg)
        assert m is not None
        assert m.group(1) == "0,4/21"

    def test_hexagon_vertices_labeled(self):
        svg = _tight_svg(show_hexagon=True)
        for k in range(1, 7):
            assert ">a%d<" % k in svg


class TestStarGeometry:
    def test_star_path_hits_the_twelve_known_points(self):
        svg = _tight_svg(show_star=True)
        paths = re.findall(r'<path class="star" d="([^"]+)"', svg)
        assert len(paths) == 1
        coords = re.findall(r"(-?\d+\.\d\d) (-?\d+\.\d\d)", paths[0])
        assert len(coords) == 12

    def test_star_aspect_fills_canvas_with_padding(self):
        # star bbox is x in [-3, 3], y in [-2, 2]; padded 5% per side the
        # height is the binding dimension at 800x450, so the star width in
        # pixels is 6 * 450 / 4.4
        svg = _tight_svg(show_star=True)
        paths = re.findall(r'<path class="star" d="([^"]+)"', svg)
        pts = [(float(x), float(y)) for x, y in
               re.findall(r"(-?\d+\.\d\d) (-?\d+\.\d\d)", paths[0])]
        xs = [x for x, _ in pts]
        ys = [y for _, y in pts]
        assert abs((max(xs) - min(xs)) - 6 * 450 / 4.4) < 0.1
        assert abs((max(ys) - min(ys)) - 4 * 450 / 4.4) < 0.1
        # padded star is centered on the canvas
        assert abs((max(xs) + min(xs)) / 2 - 400) < 0.1
        assert abs((max(ys) + min(ys)) / 2 - 225) < 0.1


class TestFloatBodies:
    def test_render_accepts_float_fit(self):
        body = ConvexPolygon([Point(0.0, 0.0), Point(4.0, 0.0),
                              Point(4.0, 3.0), Point(0.0, 3.0)])
        fit = inscribe(body)
        svg = render_svg(body, fit.hexagon, show_hexagon=True,
                         show_star=True, show_centroid=True, ratio=RATIO)
        assert svg.count("<circle") == 1
        assert svg.count("<path") == 4
