"""Upper half-plane model used as a brute-force oracle.

Polygons are laid out from explicit points and geodesics, closed by a single
bisection, and then measured: side lengths come from :func:`hdist` and angles
from Euclidean tangent directions (the model is conformal).  None of the
closed forms in :mod:`conecollar.trig` are used here, so agreement between the
two is a genuine cross-check.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateError, DomainError, NonexistenceError

HALF_PI = 0.5 * math.pi
BISECTION_TOL = 0.0  # bisect down to float resolution
MAX_CLOSING_PARAM = 30.0  # beyond this the isometry matrices lose precision
ISOMETRY_DET_TOL = 1e-12


@dataclass(frozen=True)
class HPoint:
    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0.0:
            raise DomainError(f"HPoint needs y > 0, got {self.y!r}")

    @property
    def z(self):
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, z):
        return cls(z.real, z.imag)


@dataclass(frozen=True)
class HGeodesic:
    """Geodesic stored by its boundary endpoints ``a < b``.

    ``b`` is infinite for a vertical line at ``x = a``.  Endpoints are kept
    rather than center and radius: for geodesics close to vertical, the
    difference ``center - radius`` loses most of its digits.
    """

    a: float
    b: float

    def __post_init__(self):
        a, b = self.a, self.b
        if math.isinf(a):
            a, b = b, a
        elif not math.isinf(b) and b < a:
            a, b = b, a
        if not (math.isfinite(a) and (b > a)):
            raise DomainError(f"geodesic needs two distinct endpoints, got ({self.a!r}, {self.b!r})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def vertical(cls, foot):
        return cls(foot, math.inf)

    @classmethod
    def circle(cls, center, radius):
        if not radius > 0.0:
            raise DomainError(f"geodesic radius must be positive, got {radius!r}")
        return cls(center - radius, center + radius)

    @classmethod
    def _from_unit(cls, p, e):
        """Geodesic whose endpoints, after moving ``p`` to i by a similarity, are e and -1/e."""
        if e == 0.0 or math.isinf(e):
            return cls.vertical(p.x)
        return cls(p.x + p.y * e, p.x - p.y / e)

    @classmethod
    def through(cls, p, q):
        x = (q.x - p.x) / p.y
        y = q.y / p.y
        if abs(x) <= 1e-15 * max(1.0, y):
            return cls.vertical(0.5 * (p.x + q.x))
        # circle through i and x + iy centered at c; endpoints c +- sqrt(1 + c^2)
        c = (x * x + (y - 1.0) * (y + 1.0)) / (2.0 * x)
        return cls._from_unit(p, c + math.copysign(math.hypot(1.0, c), c))

    @classmethod
    def from_heading(cls, p, heading):
        """Geodesic through ``p`` whose tangent there points along ``heading``."""
        ch, sh = math.cos(heading), math.sin(heading)
        if abs(ch) <= 1e-15:
            return cls.vertical(p.x)
        # endpoints (sin +- 1) / cos after moving p to i; take the sum without cancellation
        return cls._from_unit(p, (sh + math.copysign(1.0, sh)) / ch)

    @property
    def is_vertical(self):
        return math.isinf(self.b)

    @property
    def center(self):
        return self.a if self.is_vertical else 0.5 * (self.a + self.b)

    @property
    def radius(self):
        return None if self.is_vertical else 0.5 * (self.b - self.a)

    def side(self, p):
        """Signed quantity whose sign tells which side of the geodesic ``p`` lies on."""
        if self.is_vertical:
            return p.x - self.a
        return (p.x - self.a) * (p.x - self.b) + p.y ** 2

    def endpoints(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class HIsometry:
    """Orientation-preserving isometry z -> (az + b) / (cz + d), ad - bc = 1."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > ISOMETRY_DET_TOL * max(1.0, abs(self.a * self.d), abs(self.b * self.c)):
            raise DomainError(f"isometry determinant {det!r} != 1")

    @classmethod
    def normalized(cls, a, b, c, d):
        det = a * d - b * c
        if not det > 0.0:
            raise DomainError("matrix does not preserve the upper half-plane")
        s = math.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def frame(cls, p, heading):
        """Isometry taking i to ``p`` and the upward unit tangent at i to ``heading``."""
        t = 0.5 * (heading - HALF_PI)
        rot = cls(math.cos(t), math.sin(t), -math.sin(t), math.cos(t))
        sq = math.sqrt(p.y)
        move = cls(sq, p.x / sq, 0.0, 1.0 / sq)
        return move.compose(rot)

    def __call__(self, p):
        z = p.z
        return HPoint.from_complex((self.a * z + self.b) / (self.c * z + self.d))

    def compose(self, other):
        """self after other."""
        return HIsometry.normalized(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return HIsometry(self.d, -self.b, -self.c, self.a)

    def map_geodesic(self, g):
        lo, hi = g.endpoints()
        return HGeodesic(self._boundary(lo), self._boundary(hi))

    def _boundary(self, x):
        if math.isinf(x):
            return self.a / self.c if self.c != 0.0 else math.inf
        den = self.c * x + self.d
        if den == 0.0:
            return math.inf
        return (self.a * x + self.b) / den


def hdist(p, q):
    """Hyperbolic distance, in the form 2 asinh(|p - q| / (2 sqrt(y_p y_q)))."""
    return 2.0 * math.asinh(abs(p.z - q.z) / (2.0 * math.sqrt(p.y * q.y)))


def heading_toward(p, q):
    """Direction angle at ``p`` of the geodesic segment from ``p`` to ``q``.

    A Euclidean similarity moves ``p`` to i without changing directions;
    there the Cayley map sends geodesics through i to diameters, and its
    derivative at i turns directions by -pi/2.
    """
    dz = complex((q.x - p.x) / p.y, (q.y - p.y) / p.y)  # q' - i
    w = dz / (dz + 2j)
    return cmath.phase(w) + HALF_PI


def angle_at(p, q1, q2):
    """Interior angle at ``p`` between segments toward ``q1`` and ``q2``."""
    d = heading_toward(p, q1) - heading_toward(p, q2)
    return abs(math.remainder(d, 2.0 * math.pi))


def point_along(p, heading, dist):
    return HIsometry.frame(p, heading)(HPoint(0.0, math.exp(dist)))


def _to_axis(g):
    """Isometry sending ``g`` to the imaginary axis (endpoints to 0 and infinity)."""
    if g.is_vertical:
        return HIsometry(1.0, -g.center, 0.0, 1.0)
    lo, hi = g.endpoints()
    return HIsometry.normalized(1.0, -lo, -1.0, hi)


def _ends_after(iso, g):
    lo, hi = g.endpoints()
    return iso._boundary(lo), iso._boundary(hi)


def intersect(g1, g2):
    """Intersection point of two geodesics, or None if they do not meet.

    Computed after sending ``g1`` to the imaginary axis: ``g2`` then meets
    it at i sqrt(-e1 e2) when its endpoints e1, e2 have opposite signs.
    """
    iso = _to_axis(g1)
    e1, e2 = _ends_after(iso, g2)
    if math.isinf(e1) or math.isinf(e2):
        return None
    prod = -e1 * e2
    if not prod > 0.0:
        return None
    return iso.inverse()(HPoint(0.0, math.sqrt(prod)))


def common_perpendicular(g1, g2):
    """Geodesic orthogonal to both ``g1`` and ``g2``, with its two feet.

    With ``g1`` sent to the imaginary axis and ``g2`` to a half-circle with
    endpoints e1, e2 of equal sign, the perpendicular is |z| = sqrt(e1 e2)
    and its foot on ``g2`` is 2 e1 e2 / (e1 + e2) + i sqrt(e1 e2) |e2 - e1| / |e1 + e2|.
    Raises :class:`NonexistenceError` unless the geodesics are ultraparallel.
    """
    iso = _to_axis(g1)
    e1, e2 = _ends_after(iso, g2)
    if math.isinf(e1) or math.isinf(e2) or not e1 * e2 > 0.0:
        raise NonexistenceError("geodesics meet or are asymptotic")
    prod = e1 * e2
    root = math.sqrt(prod)
    back = iso.inverse()
    foot1 = back(HPoint(0.0, root))
    foot2 = back(HPoint(2.0 * prod / (e1 + e2), root * abs(e2 - e1) / abs(e1 + e2)))
    return back.map_geodesic(HGeodesic(-root, root)), foot1, foot2


def perpendicular_foot(p, g, tol=1e-12):
    """Foot of the perpendicular from ``p`` to ``g`` and the distance to it."""
    if g.is_vertical:
        to_axis = HIsometry.identity()
        foot_x = g.center
    else:
        # send the endpoints to 0, infinity
        lo, hi = g.endpoints()
        to_axis = HIsometry.normalized(1.0, -lo, -1.0, hi)
        foot_x = 0.0
    q = to_axis(p)
    r = math.hypot(q.x - foot_x, q.y)
    foot_q = HPoint(foot_x, r)
    d = math.asinh(abs(q.x - foot_x) / q.y)
    if d < tol:
        raise DegenerateError("point lies on the geodesic")
    return to_axis.inverse()(foot_q), d


def distance_to_geodesic(p, g):
    """Like :func:`perpendicular_foot` but returns 0 for points on ``g``."""
    if g.is_vertical:
        return math.asinh(abs(p.x - g.center) / p.y)
    lo, hi = g.endpoints()
    q = HIsometry.normalized(1.0, -lo, -1.0, hi)(p)
    return math.asinh(abs(q.x) / q.y)


# --- model conversions -------------------------------------------------------

def to_disk(p):
    """Cayley map to the Poincare disk."""
    z = p.z
    return (z - 1j) / (z + 1j)


def from_disk(w):
    return HPoint.from_complex(1j * (1.0 + w) / (1.0 - w))


def to_klein(p):
    w = to_disk(p)
    return 2.0 * w / (1.0 + abs(w) ** 2)


def from_klein(k):
    w = k / (1.0 + math.sqrt(max(0.0, 1.0 - abs(k) ** 2)))
    return from_disk(w)


# --- polygon constructions ---------------------------------------------------

@dataclass(frozen=True)
class ConstructedPolygon:
    """Concrete polygon with measured sides and interior angles.

    ``sides[k]`` joins ``vertices[k]`` to ``vertices[k + 1]`` (cyclically) and
    ``angles[k]`` is the interior angle at ``vertices[k]``.
    """

    vertices: tuple
    sides: tuple
    angles: tuple

    @classmethod
    def measure(cls, vertices):
        vs = tuple(vertices)
        k = len(vs)
        sides = tuple(hdist(vs[i], vs[(i + 1) % k]) for i in range(k))
        angles = tuple(angle_at(vs[i], vs[i - 1], vs[(i + 1) % k]) for i in range(k))
        return cls(vs, sides, angles)


def _boundary_angle(x):
    """Position of a boundary point of the half-plane on the unit circle."""
    if math.isinf(x):
        return 0.0
    return cmath.phase((x - 1j) / (x + 1j))


def _walk(frame, dist):
    """Frame moved ``dist`` along its own heading."""
    e = math.exp(0.5 * dist)
    return frame.compose(HIsometry(e, 0.0, 0.0, 1.0 / e))


def _turn(frame, theta):
    """Frame rotated counterclockwise by ``theta`` about its base point."""
    t = 0.5 * theta
    return frame.compose(HIsometry(math.cos(t), math.sin(t), -math.sin(t), math.cos(t)))


def _origin(frame):
    return frame(HPoint(0.0, 1.0))


def _ray_geodesic(frame):
    """Geodesic carrying the ray of ``frame``, with its backward and forward ends."""
    back, fwd = frame._boundary(0.0), frame._boundary(math.inf)
    return HGeodesic(back, fwd), back, fwd


def _ahead(frame, q, tol=1e-9):
    """Whether ``q`` (on the ray's geodesic) lies at or ahead of the base point."""
    return frame.inverse()(q).y > 1.0 - tol


def _close(frame1, frame2):
    """Close the rays of two frames.

    Returns ``(status, point)``.  Status ``"ok"`` means the rays meet.
    Otherwise it says on which side of the closing range the configuration
    lies: ``"miss"`` when the forward end of the second geodesic sits next to
    the forward end of the first (the rays have turned past parallel), and
    ``"behind"`` when it is the backward end, or the geodesics meet behind a
    ray.  Working from frames keeps the ray directions exact instead of
    re-deriving them from nearby vertex positions.
    """
    g1, b1, f1 = _ray_geodesic(frame1)
    g2, b2, f2 = _ray_geodesic(frame2)
    x = intersect(g1, g2)
    if x is None:
        b1, f1, b2, f2 = (_boundary_angle(e) for e in (b1, f1, b2, f2))
        tau = 2.0 * math.pi
        off = lambda th: (th - f1) % tau
        ccw = off(f2) < off(b1)
        forward_first = (off(f2) < off(b2)) == ccw
        return ("miss" if forward_first else "behind"), None
    if not _ahead(frame1, x) or not _ahead(frame2, x):
        return "behind", x
    return "ok", x


def _bisect_closing(build, target, tol=BISECTION_TOL):
    """Find the parameter where the closing angle returned by ``build`` equals ``target``.

    ``build(t)`` returns ``(status, angle, payload)``; the angle is assumed
    to decrease in ``t``, ``"behind"`` means t is too small and ``"miss"``
    means t is too large.
    """

    def excess(t):
        status, angle, _ = build(t)
        if status == "miss":
            return -1.0
        if status == "behind":
            return 1.0
        return angle - target

    lo, hi = 0.0, 1.0
    while excess(hi) > 0.0:
        lo, hi = hi, 2.0 * hi
        if hi > MAX_CLOSING_PARAM:
            raise NonexistenceError("closing condition never met")
    for _ in range(400):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    for t in (lo, hi):
        status, _, payload = build(t)
        if status == "ok":
            return t, payload
    raise NonexistenceError("bisection did not produce a closed polygon")


def _check_half_angle(phi):
    if not (0.0 < phi < HALF_PI):
        raise NonexistenceError(f"no polygon with angle {phi!r} outside (0, pi/2)")


def construct_trirectangle(side_a, phi):
    """Build a trirectangle with side ``side_a`` at the vertex opposite ``phi``.

    Vertices are returned in the order O, B, P, A with O = i, A above O and
    B to its right; ``phi`` sits at P.  The free side ``OB`` is found by
    bisection on the measured angle at P.
    """
    _check_half_angle(phi)
    if not side_a > 0.0:
        raise NonexistenceError("side must be positive")
    o = HPoint(0.0, 1.0)
    at_a = _turn(_walk(HIsometry.identity(), side_a), -HALF_PI)
    a_pt = _origin(at_a)
    at_o = _turn(HIsometry.identity(), -HALF_PI)

    def build(b):
        if b <= 0.0:
            return "behind", HALF_PI, None
        at_b = _walk(at_o, b)
        b_pt = _origin(at_b)
        status, p = _close(at_a, _turn(at_b, HALF_PI))
        if status != "ok":
            return status, None, None
        return status, angle_at(p, a_pt, b_pt), (o, b_pt, p, a_pt)

    _, verts = _bisect_closing(build, phi)
    return ConstructedPolygon.measure(verts)


def trirectangle_from_polygon(poly):
    """Read a :class:`conecollar.trig.Trirectangle` off a constructed polygon."""
    from .trig import Trirectangle

    ob, bp, pa, ao = poly.sides
    return Trirectangle(phi=poly.angles[2], a=ao, b=ob, alpha=bp, beta=pa)


def construct_hexagon(a, b, gamma):
    """Right-angled hexagon with alternate sides ``a``, ``b`` and ``gamma`` between them.

    Vertices in order: V0 = i, A1, F1, F2, B1, V1 = i e^gamma, so that the
    sides are ``(a, x, c, y, b, gamma)`` with ``c`` opposite ``gamma``.
    """
    if not (a > 0.0 and b > 0.0 and gamma > 0.0):
        raise NonexistenceError("hexagon sides must be positive")
    at_v0 = _turn(HIsometry.identity(), -HALF_PI)
    at_v1 = _turn(_walk(HIsometry.identity(), gamma), -HALF_PI)
    v0, v1 = _origin(at_v0), _origin(at_v1)
    at_a1 = _turn(_walk(at_v0, a), HALF_PI)
    at_b1 = _turn(_walk(at_v1, b), -HALF_PI)
    a1, b1 = _origin(at_a1), _origin(at_b1)
    g1 = _ray_geodesic(at_a1)[0]
    g2 = _ray_geodesic(at_b1)[0]
    try:
        _, f1, f2 = common_perpendicular(g1, g2)
    except NonexistenceError as exc:
        raise NonexistenceError(f"no right-angled hexagon for ({a}, {b}, {gamma})") from exc
    if not _ahead(at_a1, f1) or not _ahead(at_b1, f2):
        raise NonexistenceError(f"no convex right-angled hexagon for ({a}, {b}, {gamma})")
    return ConstructedPolygon.measure((v0, a1, f1, f2, b1, v1))


def construct_pentagon(phi, half1, half2):
    """Pentagon with four right angles: half of a V-piece.

    Vertices in order: P (angle ``phi``), V0, V1 = i, V2, V3.  The sides are
    ``(d1, half1, seam, half2, d2)``; the seam is found by bisection.
    """
    _check_half_angle(phi)
    if not (half1 > 0.0 and half2 > 0.0):
        raise NonexistenceError("boundary half-lengths must be positive")
    at_v1 = _turn(HIsometry.identity(), -HALF_PI)
    at_v0 = _turn(_walk(HIsometry.identity(), half1), -HALF_PI)
    v1, v0 = _origin(at_v1), _origin(at_v0)

    def build(s):
        if s <= 0.0:
            return "behind", math.pi, None
        at_v2 = _turn(_walk(at_v1, s), HALF_PI)
        at_v3 = _turn(_walk(at_v2, half2), HALF_PI)
        v2, v3 = _origin(at_v2), _origin(at_v3)
        status, p = _close(at_v0, at_v3)
        if status != "ok":
            return status, None, None
        return status, angle_at(p, v0, v3), (p, v0, v1, v2, v3)

    _, verts = _bisect_closing(build, phi)
    return ConstructedPolygon.measure(verts)


def construct_joker_quadrilateral(phi1, phi2, half_len):
    """Quadrilateral with two right angles: half of a joker's hat.

    Vertices in order: F1 = i, P1 (angle ``phi1``), P2 (angle ``phi2``),
    F2 = i e^half_len.  Sides are ``(d1, cone_sep, d2, half_len)``; ``d1`` is
    found by bisection on the measured angle at P2.
    """
    _check_half_angle(phi1)
    _check_half_angle(phi2)
    if not half_len > 0.0:
        raise NonexistenceError("boundary length must be positive")
    at_f1 = _turn(HIsometry.identity(), -HALF_PI)
    at_f2 = _turn(_walk(HIsometry.identity(), half_len), -HALF_PI)
    f1, f2 = _origin(at_f1), _origin(at_f2)

    def build(d1):
        if d1 <= 0.0:
            return "behind", math.pi, None
        at_p1 = _turn(_walk(at_f1, d1), math.pi - phi1)
        p1 = _origin(at_p1)
        status, p2 = _close(at_f2, at_p1)
        if status != "ok":
            return status, None, None
        return status, angle_at(p2, p1, f2), (f1, p1, p2, f2)

    _, verts = _bisect_closing(build, phi2)
    return ConstructedPolygon.measure(verts)


def polygon_contains(poly, p):
    """Whether ``p`` lies in the (convex) polygon, tested in the Klein model."""
    ks = [to_klein(v) for v in poly.vertices]
    q = to_klein(p)
    sign = 0
    for i, k0 in enumerate(ks):
        k1 = ks[(i + 1) % len(ks)]
        cross = (k1 - k0).real * (q - k0).imag - (k1 - k0).imag * (q - k0).real
        s = 1 if cross > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def sample_polygon(poly, count, rng):
    """Uniform-in-Klein-coordinates rejection sample of interior points."""
    ks = [to_klein(v) for v in poly.vertices]
    xs = [k.real for k in ks]
    ys = [k.imag for k in ks]
    out = []
    while len(out) < count:
        k = complex(rng.uniform(min(xs), max(xs)), rng.uniform(min(ys), max(ys)))
        if abs(k) >= 1.0:
            continue
        p = from_klein(k)
        if polygon_contains(poly, p):
            out.append(p)
    return out
