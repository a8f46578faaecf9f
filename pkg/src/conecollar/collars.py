"""Collar widths, collar metrics and disjointness certificates.

Geodesic collars use one surface-wide width formula driven by the largest
cone half-angle; surfaces without cone points fall back to cos(phi) = 1,
the classical collar.
"""

import logging
import math
import sys
from dataclasses import asdict, dataclass, field

from scipy.integrate import quad

from . import trig
from .errors import DomainError
from .pants import JokersHat, VPiece, YPiece, cone_to_boundary_distance, seam_length

log = logging.getLogger(__name__)

NEAR_DEGENERATE_MARGIN = 1e-10
RESOLUTION_ULPS = 8  # margins within this many ulps of the sides are rounding noise


def _cos_max(phi_max):
    if phi_max is None:
        return 1.0
    trig.check_angle(phi_max, "phi_max")
    return math.cos(phi_max)


def geodesic_collar_width(length, phi_max):
    """arcsinh(cos(phi_max) / sinh(length / 2)); ``phi_max=None`` means no cone points."""
    trig.check_length(length)
    return math.asinh(_cos_max(phi_max) / math.sinh(0.5 * length))


def cone_collar_width(phi):
    """arccosh(1 / sin(phi))."""
    trig.check_angle(phi)
    return trig.acosh_guarded(1.0 / math.sin(phi))


def torus_sharp_width(phi):
    """Sharp cone-collar width on a torus with one cone point: arccosh(1 / sin(phi / 2))."""
    trig.check_angle(phi)
    return trig.acosh_guarded(1.0 / math.sin(0.5 * phi))


@dataclass(frozen=True)
class Collar:
    kind: str  # "geodesic" or "cone"
    owner: int
    width: float
    length: float = None  # geodesic collars
    phi: float = None  # cone collars


@dataclass(frozen=True)
class CollarMetric:
    """ds^2 = drho^2 + g(rho)^2 dt^2 on [rho_min, rho_max] x [0, 2 pi)."""

    collar: Collar
    rho_min: float
    rho_max: float
    area: float

    def coefficient(self, rho):
        c = self.collar
        if c.kind == "geodesic":
            return c.length / (2.0 * math.pi) * math.cosh(rho)
        return c.phi / math.pi * math.sinh(rho)

    def closed_form_area(self):
        c = self.collar
        if c.kind == "geodesic":
            return 2.0 * c.length * math.sinh(c.width)
        return 2.0 * c.phi * (math.cosh(c.width) - 1.0)


def collar_metric(c):
    """Metric of a collar in Fermi (geodesic) or polar (cone) coordinates.

    The t-circle is normalised to length 2 pi, so the coefficient is the
    circumference density.  The area is integrated numerically.
    """
    if c.kind == "geodesic":
        lo, hi = -c.width, c.width
        dens = lambda rho: c.length * math.cosh(rho)
    elif c.kind == "cone":
        lo, hi = 0.0, c.width
        dens = lambda rho: 2.0 * c.phi * math.sinh(rho)
    else:
        raise DomainError(f"unknown collar kind {c.kind!r}")
    area, _ = quad(dens, lo, hi, epsabs=0.0, epsrel=1e-13)
    return CollarMetric(c, lo, hi, area)


def surface_collars(s):
    """All geodesic and cone collars of a partitioned surface."""
    phi_max = s.phi_max
    out = [Collar("geodesic", k, geodesic_collar_width(x, phi_max), length=x)
           for k, x in enumerate(s.lengths)]
    out += [Collar("cone", l, cone_collar_width(phi), phi=phi)
            for l, phi in enumerate(s.half_angles)]
    return out


def total_collar_area(s):
    return math.fsum(collar_metric(c).closed_form_area() for c in surface_collars(s))


@dataclass
class PairRecord:
    pants: int
    kind: str  # "cone-cone", "geodesic-geodesic", "cone-geodesic"
    pair: tuple
    inequality: str
    lhs: float
    rhs: float

    @property
    def margin(self):
        return self.lhs - self.rhs

    @property
    def passed(self):
        return self.margin > 0.0

    @property
    def near_degenerate(self):
        return self.passed and self.margin < NEAR_DEGENERATE_MARGIN

    @property
    def unresolved(self):
        """Margin too small to resolve in double precision; its sign is not meaningful."""
        scale = max(abs(self.lhs), abs(self.rhs))
        return abs(self.margin) <= RESOLUTION_ULPS * sys.float_info.epsilon * scale

    def to_dict(self):
        d = asdict(self)
        d["pair"] = list(self.pair)
        d.update(margin=self.margin, passed=self.passed)
        return d


@dataclass
class DisjointnessCertificate:
    phi_max: float
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    @property
    def min_margin(self):
        return min((r.margin for r in self.records), default=math.inf)

    def warnings(self):
        return [r for r in self.records if r.near_degenerate]

    def unresolved(self):
        return [r for r in self.records if r.unresolved]


def certify_disjoint(s):
    """Per-pants inequalities that make the collars of ``s`` pairwise disjoint.

    * cone-cone (joker's hat): the cone seam is longer than v1 + v2;
    * geodesic-geodesic (Y- and V-pieces): each seam is at least w_i + w_j;
    * cone-geodesic (V-pieces, joker's hats): the cone-to-boundary
      perpendicular is longer than w + v.
    """
    phi_max = s.phi_max
    w = [geodesic_collar_width(x, phi_max) for x in s.lengths]
    v = [cone_collar_width(phi) for phi in s.half_angles]
    cert = DisjointnessCertificate(phi_max)
    add = cert.records.append
    for i, slots in enumerate(s.pants):
        p = s.piece(i)
        curves = [sl.index for sl in slots if sl.kind == "curve"]
        cones = [sl.index for sl in slots if sl.kind == "cone"]
        if isinstance(p, YPiece):
            for a in range(3):
                for b in range(a + 1, 3):
                    ka, kb = curves[a], curves[b]
                    add(PairRecord(i, "geodesic-geodesic", (f"curve:{ka}", f"curve:{kb}"),
                                   "seam > w_a + w_b", seam_length(p, a, b), w[ka] + w[kb]))
        elif isinstance(p, VPiece):
            k1, k2 = curves
            (l,) = cones
            add(PairRecord(i, "geodesic-geodesic", (f"curve:{k1}", f"curve:{k2}"),
                           "c1 + c2 > w_1 + w_2", seam_length(p, 0, 1), w[k1] + w[k2]))
            for b, k in enumerate(curves):
                add(PairRecord(i, "cone-geodesic", (f"cone:{l}", f"curve:{k}"),
                               "d(p, gamma) > w + v", cone_to_boundary_distance(p, 0, b),
                               w[k] + v[l]))
        elif isinstance(p, JokersHat):
            (k,) = curves
            l1, l2 = cones
            add(PairRecord(i, "cone-cone", (f"cone:{l1}", f"cone:{l2}"),
                           "d(p1, p2) > v1 + v2", p.cone_separation, v[l1] + v[l2]))
            for c, l in enumerate(cones):
                add(PairRecord(i, "cone-geodesic", (f"cone:{l}", f"curve:{k}"),
                               "d(p, gamma) > w + v", cone_to_boundary_distance(p, c, 0),
                               w[k] + v[l]))
    for r in cert.warnings():
        log.warning("near-degenerate margin %.3e in pants %d (%s)", r.margin, r.pants, r.kind)
    return cert


def intersection_inequality(len_gamma, len_delta, phi_max):
    """Necessary condition for two closed geodesics to cross transversally.

    Returns ``(cos(phi_max), sinh(len_gamma/2) sinh(len_delta/2) > cos(phi_max))``.
    """
    trig.check_length(len_gamma, "len_gamma")
    trig.check_length(len_delta, "len_delta")
    bound = _cos_max(phi_max)
    return bound, math.sinh(0.5 * len_gamma) * math.sinh(0.5 * len_delta) > bound


def optimality_probe(phi, len_gamma, len_gamma_prime):
    """Distance from gamma' to the collar of gamma inside the V-piece (phi, gamma, gamma').

    Equal to seam - w(len_gamma, phi): the seam realises d(gamma, gamma').
    """
    p = VPiece(phi, len_gamma, len_gamma_prime)
    return p.seam - geodesic_collar_width(len_gamma, phi)


def cone_optimality_probe(phi, len_gamma, len_gamma_prime):
    """Distance from gamma' to the collar of the cone point inside the same V-piece."""
    p = VPiece(phi, len_gamma, len_gamma_prime)
    return p.cone_distances[1] - cone_collar_width(phi)


def probe_threshold(probe, phi, len_gamma, eps, hi=1.0, max_len=700.0):
    """Smallest gamma' length (to 1e-9) at which ``probe`` drops below ``eps``.

    Returns None if the probe stays above ``eps`` up to ``max_len``.
    """
    lo = None
    while probe(phi, len_gamma, hi) >= eps:
        lo, hi = hi, 2.0 * hi
        if hi > max_len:
            return None
    if lo is None:
        lo = 1e-6
        if probe(phi, len_gamma, lo) < eps:
            return lo
    while hi - lo > 1e-9:
        mid = 0.5 * (lo + hi)
        if probe(phi, len_gamma, mid) < eps:
            hi = mid
        else:
            lo = mid
    return hi
