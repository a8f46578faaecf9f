"""Static SVG figures of pants polygons in the Poincare disk."""

import math

from . import halfplane as hp
from .collars import cone_collar_width, geodesic_collar_width
from .trig import hexagon_middle_side

SIZE = 440
RADIUS = 200.0
ARC_SAMPLES = 48


def _screen(w):
    c = SIZE / 2
    return c + RADIUS * w.real, c - RADIUS * w.imag


def _recentre(poly):
    """Isometry moving the polygon's Klein-model vertex centroid to i.

    The centroid is not equivariant, so the move is repeated until the
    centroid lands at the origin of the disk.
    """
    iso = hp.HIsometry.identity()
    for _ in range(50):
        ks = [hp.to_klein(iso(v)) for v in poly.vertices]
        k = sum(ks) / len(ks)
        if abs(k) < 1e-12:
            break
        iso = hp.HIsometry.frame(hp.from_klein(k), 0.5 * math.pi).inverse().compose(iso)
    return iso


def _arc_to(w1, w2):
    """SVG path command drawing the disk geodesic from w1 to w2."""
    x2, y2 = _screen(w2)
    if abs(w1) < 1e-12:
        return f"L {x2:.4f} {y2:.4f}"
    w_inv = 1.0 / w1.conjugate()
    # circumcircle of w1, w2 and the inversion of w1
    a, b, c = w1, w2, w_inv
    d = 2.0 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    if abs(d) < 1e-12:
        return f"L {x2:.4f} {y2:.4f}"
    ux = (abs(a) ** 2 * (b.imag - c.imag) + abs(b) ** 2 * (c.imag - a.imag)
          + abs(c) ** 2 * (a.imag - b.imag)) / d
    uy = (abs(a) ** 2 * (c.real - b.real) + abs(b) ** 2 * (a.real - c.real)
          + abs(c) ** 2 * (b.real - a.real)) / d
    centre = complex(ux, uy)
    r = abs(a - centre) * RADIUS
    u, v = a - centre, b - centre
    # flipping y keeps the visual orientation; counterclockwise is sweep 0 in SVG
    sweep = 0 if (u.real * v.imag - u.imag * v.real) > 0 else 1
    return f"A {r:.4f} {r:.4f} 0 0 {sweep} {x2:.4f} {y2:.4f}"


def polygon_path(points):
    ws = [hp.to_disk(p) for p in points]
    x0, y0 = _screen(ws[0])
    cmds = [f"M {x0:.4f} {y0:.4f}"]
    for i in range(len(ws)):
        cmds.append(_arc_to(ws[i], ws[(i + 1) % len(ws)]))
    return " ".join(cmds + ["Z"])


def cone_sector(vertex, prev, nxt, radius):
    """Sampled boundary of the disc sector of ``radius`` at ``vertex`` inside the polygon."""
    h0 = hp.heading_toward(vertex, prev)
    sweep = math.remainder(hp.heading_toward(vertex, nxt) - h0, 2.0 * math.pi)
    pts = [vertex]
    for i in range(ARC_SAMPLES + 1):
        pts.append(hp.point_along(vertex, h0 + sweep * i / ARC_SAMPLES, radius))
    return pts


def half_collar_band(start, end, width, side_heading_turn):
    """Sampled band of ``width`` along the segment start-end, on the side given by the turn."""
    length = hp.hdist(start, end)
    h = hp.heading_toward(start, end)
    feet = [hp.point_along(start, h, length * i / ARC_SAMPLES) for i in range(ARC_SAMPLES + 1)]
    out = []
    for k, f in enumerate(feet):
        if k < ARC_SAMPLES:
            heading = hp.heading_toward(f, end)
        else:
            heading = hp.heading_toward(f, start) + math.pi
        out.append(hp.point_along(f, heading + side_heading_turn, width))
    return feet + out[::-1]


def svg_document(poly, title, shaded=(), notes=()):
    iso = _recentre(poly)
    moved = [iso(v) for v in poly.vertices]
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title}</title>",
        "<!-- measured sides: " + ", ".join(f"{s:.12f}" for s in poly.sides) + " -->",
        "<!-- measured angles: " + ", ".join(f"{a:.12f}" for a in poly.angles) + " -->",
    ]
    parts += [f"<!-- {n} -->" for n in notes]
    parts.append(f'<circle cx="{SIZE / 2}" cy="{SIZE / 2}" r="{RADIUS}" fill="none" stroke="#888"/>')
    for pts, colour in shaded:
        parts.append(f'<path d="{polygon_path([iso(p) for p in pts])}" fill="{colour}" '
                     f'fill-opacity="0.45" stroke="none"/>')
    parts.append(f'<path d="{polygon_path(moved)}" fill="none" stroke="black" stroke-width="1.5"/>')
    for v in moved:
        x, y = _screen(hp.to_disk(v))
        parts.append(f'<circle cx="{x:.4f}" cy="{y:.4f}" r="2.5" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(kind, params):
    """SVG text for one of the pants polygons; raises NonexistenceError on bad data."""
    if kind == "trirectangle":
        a, phi = params
        poly = hp.construct_trirectangle(a, phi)
        return svg_document(poly, f"trirectangle a={a} phi={phi}")
    if kind == "hexagon":
        a, b, gamma = params
        poly = hp.construct_hexagon(a, b, gamma)
        return svg_document(poly, f"right-angled hexagon ({a}, {b}, {gamma})")
    if kind == "ypiece":
        l1, l2, l3 = params
        seam = hexagon_middle_side(0.5 * l1, 0.5 * l2, 0.5 * l3)
        poly = hp.construct_hexagon(0.5 * l1, 0.5 * l2, seam)
        return svg_document(poly, f"Y-piece half ({l1}, {l2}, {l3})")
    if kind == "vpiece":
        phi, l1, l2 = params
        poly = hp.construct_pentagon(phi, 0.5 * l1, 0.5 * l2)
        return svg_document(poly, f"V-piece half phi={phi} ({l1}, {l2})")
    if kind in ("jokershat", "collar"):
        phi1, phi2, l = params
        poly = hp.construct_joker_quadrilateral(phi1, phi2, 0.5 * l)
        if kind == "jokershat":
            return svg_document(poly, f"joker's hat half ({phi1}, {phi2}, {l})")
        f1, p1, p2, f2 = poly.vertices
        phi_max = max(phi1, phi2)
        v1, v2 = cone_collar_width(phi1), cone_collar_width(phi2)
        w = geodesic_collar_width(l, phi_max)
        shaded = [
            (cone_sector(p1, f1, p2, v1), "#d95f02"),
            (cone_sector(p2, p1, f2, v2), "#d95f02"),
            (half_collar_band(f2, f1, w, math.pi / 2), "#1b9e77"),
        ]
        notes = [f"collar widths: w={w:.12f} v1={v1:.12f} v2={v2:.12f}"]
        return svg_document(poly, f"collars in joker's hat ({phi1}, {phi2}, {l})", shaded, notes)
    raise ValueError(f"unknown figure kind {kind!r}")


KIND_ARITY = {"trirectangle": 2, "hexagon": 3, "ypiece": 3, "vpiece": 3, "jokershat": 3, "collar": 3}
