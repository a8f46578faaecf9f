import math
import random
import re
import xml.etree.ElementTree as ET

import pytest

from conecollar import halfplane as hp
from conecollar import render as R
from conecollar import trig
from conecollar.collars import cone_collar_width, geodesic_collar_width
from conecollar.errors import NonexistenceError

PI = math.pi


def comment_numbers(svg, label):
    m = re.search(rf"<!-- {label}: ([^>]*) -->", svg)
    assert m, label
    return [float(x) for x in m.group(1).split(",")]


def test_regular_hexagon_figure():
    s = trig.acosh_guarded(2.0)
    svg = R.render("hexagon", [s, s, s])
    ET.fromstring(svg)  # well formed
    angles = comment_numbers(svg, "measured angles")
    assert len(angles) == 6
    assert all(abs(a - trig.HALF_PI) < 1e-10 for a in angles)
    sides = comment_numbers(svg, "measured sides")
    assert all(x == pytest.approx(s, abs=1e-9) for x in sides)
    outline = re.findall(r'<path d="([^"]*)" fill="none"', svg)[0]
    assert outline.count("A ") + outline.count("L ") == 6


@pytest.mark.parametrize("kind, params, right", [
    ("trirectangle", [1.0, PI / 4], [0, 1, 3]),
    ("ypiece", [1.0, 2.0, 3.0], range(6)),
    ("vpiece", [0.6, 1.0, 2.0], [1, 2, 3, 4]),
    ("jokershat", [0.5, 0.9, 2.0], [0, 3]),
])
def test_figures_have_right_angles(kind, params, right):
    svg = R.render(kind, params)
    ET.fromstring(svg)
    angles = comment_numbers(svg, "measured angles")
    for k in right:
        assert abs(angles[k] - trig.HALF_PI) < 1e-10


def test_figure_inside_disk():
    svg = R.render("vpiece", [0.3, 0.2, 5.0])
    for cx, cy in re.findall(r'<circle cx="([\d.]+)" cy="([\d.]+)" r="2.5"', svg):
        assert math.hypot(float(cx) - R.SIZE / 2, float(cy) - R.SIZE / 2) < R.RADIUS


def test_invalid_hexagon_raises():
    with pytest.raises(NonexistenceError):
        R.render("hexagon", [1.0, 1.0, 0.1])
    with pytest.raises(ValueError):
        R.render("heptagon", [1.0])


def test_collar_figure_regions_disjoint():
    phi, length = PI / 4, 2.0
    svg = R.render("collar", [phi, phi, length])
    assert svg.count('fill-opacity="0.45"') == 3
    assert "<!-- collar widths: w=" in svg
    poly = hp.construct_joker_quadrilateral(phi, phi, 0.5 * length)
    f1, p1, p2, f2 = poly.vertices
    gamma = hp.HGeodesic.through(f1, f2)
    v = cone_collar_width(phi)
    w = geodesic_collar_width(length, phi)
    rng = random.Random(0)
    counts = [0, 0, 0]
    for q in hp.sample_polygon(poly, 10_000, rng):
        inside = [hp.hdist(q, p1) < v, hp.hdist(q, p2) < v, hp.distance_to_geodesic(q, gamma) < w]
        assert sum(inside) <= 1
        counts = [c + i for c, i in zip(counts, inside)]
    assert all(counts)


def test_sector_and_band_shapes():
    poly = hp.construct_joker_quadrilateral(0.6, 0.6, 1.0)
    f1, p1, p2, f2 = poly.vertices
    sector = R.cone_sector(p1, f1, p2, 0.3)
    assert all(hp.hdist(p1, q) == pytest.approx(0.3, rel=1e-9) for q in sector[1:])
    band = R.half_collar_band(f2, f1, 0.2, PI / 2)
    gamma = hp.HGeodesic.through(f1, f2)
    outer = band[R.ARC_SAMPLES + 1:]
    assert all(hp.distance_to_geodesic(q, gamma) == pytest.approx(0.2, rel=1e-7) for q in outer)
