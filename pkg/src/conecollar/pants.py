"""Pairs of pants with zero, one or two cone points.

A Y-piece is two right-angled hexagons, a V-piece two pentagons with four
right angles, a joker's hat two quadrilaterals with two right angles.  The
pentagon and the quadrilateral are each cut into two trirectangles by a
single perpendicular; every quantity below is read off those trirectangles.

V-piece pentagon (cone point p, half-angle phi)::

    p ---- d1 ---- gamma1 (half length l1/2) -- c1 --+-- c2 -- gamma2 (l2/2) -- d2 -- p
                                                     H

The perpendicular from p to the seam lands at H, splitting phi into
``phi1 + phi2 = phi`` and the seam into ``c1 + c2``.  The two trirectangles
share the side pH, which closes the split:
cosh(l1/2) / sin(phi1) = cosh(l2/2) / sin(phi2).

Joker's hat quadrilateral (cone points p1, p2; boundary gamma of length l):
the common perpendicular of the seam p1p2 and gamma, of length ``h``, cuts
gamma's half into ``x1 + x2 = l/2`` with ``cos(phi_i) = sinh(x_i) sinh(h)``.
"""

import math
import sys
from dataclasses import dataclass
from functools import cached_property

from scipy.optimize import brentq

from . import trig
from .errors import DegenerateError, DomainError

DEGENERATE_TOL = 1e-8


def _check_length(x, name):
    trig.check_length(x, name)
    if x < DEGENERATE_TOL:
        raise DegenerateError(f"{name}={x!r} is below {DEGENERATE_TOL}")


def _check_angle(phi, name):
    trig.check_angle(phi, name)
    if phi < DEGENERATE_TOL or phi > trig.HALF_PI - DEGENERATE_TOL:
        raise DegenerateError(f"{name}={phi!r} is within {DEGENERATE_TOL} of the domain boundary")


@dataclass(frozen=True)
class YPiece:
    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        for i, x in enumerate(self.lengths, 1):
            _check_length(x, f"l{i}")

    @property
    def lengths(self):
        return (self.l1, self.l2, self.l3)

    @property
    def half_angles(self):
        return ()


@dataclass(frozen=True)
class VPiece:
    phi: float
    l1: float
    l2: float

    def __post_init__(self):
        _check_angle(self.phi, "phi")
        _check_length(self.l1, "l1")
        _check_length(self.l2, "l2")

    @property
    def lengths(self):
        return (self.l1, self.l2)

    @property
    def half_angles(self):
        return (self.phi,)

    @cached_property
    def split(self):
        """Angles ``(phi1, phi2)`` at the cone point on the gamma1 and gamma2 sides.

        From sin(phi - phi1) = r sin(phi1) with r = cosh(l2/2) / cosh(l1/2):
        tan(phi1) = sin(phi) / (r + cos(phi)).
        """
        r = math.cosh(0.5 * self.l2) / math.cosh(0.5 * self.l1)
        phi1 = math.atan2(math.sin(self.phi), r + math.cos(self.phi))
        return phi1, self.phi - phi1

    @cached_property
    def half_collars(self):
        """Distances ``(c1, c2)`` from each boundary to the foot H on the seam."""
        phi1, phi2 = self.split
        return (trig.tri_half_collar(0.5 * self.l1, phi1),
                trig.tri_half_collar(0.5 * self.l2, phi2))

    @cached_property
    def cone_distances(self):
        """Distances from the cone point to gamma1 and gamma2."""
        return tuple(trig.tri_cone_to_side(c, phi)
                     for c, phi in zip(self.half_collars, self.split))

    @property
    def seam(self):
        c1, c2 = self.half_collars
        return c1 + c2


@dataclass(frozen=True)
class JokersHat:
    phi1: float
    phi2: float
    l: float

    def __post_init__(self):
        _check_angle(self.phi1, "phi1")
        _check_angle(self.phi2, "phi2")
        _check_length(self.l, "l")

    @property
    def lengths(self):
        return (self.l,)

    @property
    def half_angles(self):
        return (self.phi1, self.phi2)

    @cached_property
    def split(self):
        """``(h, x1, x2)``: perpendicular from the cone seam to gamma and the two pieces of l/2."""
        half = 0.5 * self.l
        c1, c2 = math.cos(self.phi1), math.cos(self.phi2)
        if self.phi1 == self.phi2:
            h = math.asinh(c1 / math.sinh(0.5 * half))
        else:
            def excess(h):
                s = math.sinh(h)
                return math.asinh(c1 / s) + math.asinh(c2 / s) - half

            lo = math.asinh(max(c1, c2) / math.sinh(half))
            hi = math.asinh((c1 + c2) / half)
            h = brentq(excess, lo, hi, xtol=1e-15, rtol=4 * sys.float_info.epsilon, maxiter=200)
        x1 = trig.tri_half_collar(h, self.phi1)
        return h, x1, half - x1

    @cached_property
    def cone_distances(self):
        h, _, _ = self.split
        return (trig.tri_cone_to_side(h, self.phi1), trig.tri_cone_to_side(h, self.phi2))

    @cached_property
    def cone_separation(self):
        """Length of the seam joining the two cone points."""
        _, x1, x2 = self.split
        return trig.tri_cone_to_side(x1, self.phi1) + trig.tri_cone_to_side(x2, self.phi2)


def pants_area(p):
    """Hyperbolic area: 2 pi minus the full cone angles."""
    return 2.0 * math.pi - 2.0 * sum(p.half_angles)


def cone_to_boundary_distance(p, which_cone=0, which_boundary=0):
    if isinstance(p, VPiece):
        if which_cone != 0 or which_boundary not in (0, 1):
            raise DomainError("V-piece has cone 0 and boundaries 0, 1")
        return p.cone_distances[which_boundary]
    if isinstance(p, JokersHat):
        if which_cone not in (0, 1) or which_boundary != 0:
            raise DomainError("joker's hat has cones 0, 1 and boundary 0")
        return p.cone_distances[which_cone]
    raise DomainError(f"{type(p).__name__} has no cone point")


def seam_length(p, i, j):
    """Length of the common perpendicular between geodesic boundaries ``i`` and ``j``."""
    if i == j:
        raise DomainError("seam needs two distinct boundary slots")
    if isinstance(p, YPiece):
        ls = p.lengths
        (k,) = {0, 1, 2} - {i, j}
        return trig.hexagon_middle_side(0.5 * ls[i], 0.5 * ls[j], 0.5 * ls[k])
    if isinstance(p, VPiece):
        if {i, j} != {0, 1}:
            raise DomainError("V-piece geodesic boundaries are 0 and 1")
        return p.seam
    raise DomainError(f"{type(p).__name__} has fewer than two geodesic boundaries")


def half_collar_widths(p):
    """Per-boundary half-collar widths that fit disjointly inside ``p``.

    Y-piece: the classical width arcsinh(1 / sinh(l/2)).  V-piece: the seam
    pieces ``(c1, c2)`` on either side of H.  Joker's hat: ``h``, where the
    collar meets its mirror image across the cone seam.
    """
    if isinstance(p, YPiece):
        return tuple(math.asinh(1.0 / math.sinh(0.5 * x)) for x in p.lengths)
    if isinstance(p, VPiece):
        return p.half_collars
    if isinstance(p, JokersHat):
        return (p.split[0],)
    raise DomainError(f"not a pair of pants: {p!r}")


def make_pants(lengths, half_angles):
    """Build the right pants type from its geodesic lengths and cone half-angles."""
    lengths, half_angles = tuple(lengths), tuple(half_angles)
    kinds = {(3, 0): YPiece, (2, 1): VPiece, (1, 2): JokersHat}
    try:
        cls = kinds[len(lengths), len(half_angles)]
    except KeyError:
        raise DomainError(
            f"pants with {len(lengths)} geodesic and {len(half_angles)} cone boundaries"
        ) from None
    if cls is YPiece:
        return YPiece(*lengths)
    if cls is VPiece:
        return VPiece(half_angles[0], *lengths)
    return JokersHat(half_angles[0], half_angles[1], lengths[0])
