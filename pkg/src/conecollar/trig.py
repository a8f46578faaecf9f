"""Scalar hyperbolic trigonometry.

Every pants computation reduces to trirectangles (quadrilaterals with three
right angles and one acute angle ``phi``) plus the right-angled hexagon
relation.  The labeling used throughout the package is::

            alpha
      P o----------o B
        |          |
   beta |          | b
        |          |
      A o----------o O
             a

``P`` carries the acute angle ``phi``; ``O`` is the right-angled vertex
opposite to it, where the sides ``a`` and ``b`` meet.  ``alpha`` is the side
opposite ``a`` and ``beta`` the side opposite ``b``; both touch ``P``.  The
relations this labeling gives are

    cos(phi)   = sinh(a) sinh(b)
    cosh(alpha) = cosh(a) / sin(phi)
    sinh(beta)  = cosh(a) sinh(b) / sin(phi) = coth(a) cot(phi)

Any consistent relabeling yields the same three printed formulas.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidHexagonError

HALF_PI = 0.5 * math.pi

# below this, arccosh(1 + eps) is taken from its series
ACOSH_SERIES_CUTOFF = 1e-8


def check_angle(phi, name="phi"):
    """Reject half-angles outside the open interval (0, pi/2)."""
    if not (0.0 < phi < HALF_PI):
        raise DomainError(f"{name}={phi!r} must lie in the open interval (0, pi/2)")
    return phi


def check_length(x, name="length"):
    if not (x > 0.0 and math.isfinite(x)):
        raise DomainError(f"{name}={x!r} must be positive and finite")
    return x


def acosh_guarded(x):
    """arccosh(x) for x >= 1, accurate for x just above 1."""
    if not x >= 1.0:
        raise DomainError(f"arccosh argument {x!r} < 1")
    eps = x - 1.0
    if eps < ACOSH_SERIES_CUTOFF:
        # arccosh(1 + e) = sqrt(2e) (1 - e/12 + 3e^2/160 - ...)
        return math.sqrt(2.0 * eps) * (1.0 - eps / 12.0)
    return math.log(x + math.sqrt(eps * (x + 1.0)))


def asinh_guarded(x):
    """arcsinh(x) for x >= 0."""
    if not x >= 0.0:
        raise DomainError(f"arcsinh argument {x!r} < 0")
    return math.asinh(x)


def tri_cone_to_side(h, phi):
    """Side touching the acute vertex, from the opposite side ``h``.

    cosh c = cosh h / sin phi; the cone-to-geodesic perpendicular in a
    V-piece or joker's hat.
    """
    check_angle(phi)
    if h < 0.0:
        raise DomainError(f"h={h!r} must be nonnegative")
    return acosh_guarded(math.cosh(h) / math.sin(phi))


def tri_half_collar(half_len, phi):
    """sinh c = cos phi / sinh(half_len)."""
    check_length(half_len, "half_len")
    check_angle(phi)
    return math.asinh(math.cos(phi) / math.sinh(half_len))


def tri_joker_perp(quarter_len, phi):
    """sinh c = coth(quarter_len) cot(phi)."""
    check_length(quarter_len, "quarter_len")
    check_angle(phi)
    return math.asinh(math.cos(phi) / (math.tanh(quarter_len) * math.sin(phi)))


def hexagon_opposite_side(a, b, gamma):
    """Alternate side opposite ``gamma`` in a right-angled hexagon.

    ``a`` and ``b`` are alternate sides and ``gamma`` is the side between them:
    cosh c = sinh a sinh b cosh gamma - cosh a cosh b.
    """
    for name, x in (("a", a), ("b", b), ("gamma", gamma)):
        check_length(x, name)
    rhs = math.sinh(a) * math.sinh(b) * math.cosh(gamma) - math.cosh(a) * math.cosh(b)
    if not rhs > 1.0:
        raise InvalidHexagonError(
            f"sinh a sinh b cosh gamma - cosh a cosh b = {rhs!r} <= 1 for "
            f"(a, b, gamma) = ({a!r}, {b!r}, {gamma!r})"
        )
    return acosh_guarded(rhs)


def hexagon_middle_side(a, b, c):
    """Side between alternate sides ``a`` and ``b`` when the third alternate is ``c``.

    Inverse of :func:`hexagon_opposite_side`; any three positive alternate
    sides determine a hexagon.
    """
    for name, x in (("a", a), ("b", b), ("c", c)):
        check_length(x, name)
    return acosh_guarded(
        (math.cosh(c) + math.cosh(a) * math.cosh(b)) / (math.sinh(a) * math.sinh(b))
    )


def pentagon_opposite_side(a, b, phi):
    """Side joining ``a`` and ``b`` in a pentagon with four right angles.

    ``a`` and ``b`` both touch the side being computed and the vertex opposite
    to it carries the angle ``phi``; this is the hexagon relation with the
    third alternate side collapsed to a cone point.
    """
    check_length(a, "a")
    check_length(b, "b")
    check_angle(phi)
    return acosh_guarded(
        (math.cos(phi) + math.cosh(a) * math.cosh(b)) / (math.sinh(a) * math.sinh(b))
    )


def collar_sum_sinh(length, phi):
    """Closed form for sinh(w + v) with w the geodesic and v the cone collar width."""
    check_length(length)
    check_angle(phi)
    s = math.sinh(0.5 * length)
    c = math.cos(phi)
    return (1.0 + math.sqrt(c * c + s * s)) / s * (c / math.sin(phi))


@dataclass(frozen=True)
class Trirectangle:
    """Trirectangle in the labeling of the module docstring."""

    phi: float
    a: float
    b: float
    alpha: float
    beta: float

    @classmethod
    def from_side(cls, a, phi):
        """Solve the trirectangle with side ``a`` at the right vertex opposite ``phi``."""
        b = tri_half_collar(a, phi)
        return cls(phi=phi, a=a, b=b, alpha=tri_cone_to_side(a, phi),
                   beta=tri_cone_to_side(b, phi))

    def sides(self):
        """Sides in cyclic order O->A->P->B->O."""
        return (self.a, self.beta, self.alpha, self.b)

    def residuals(self):
        """Relative residuals of the three defining relations."""
        s = math.sin(self.phi)
        out = []
        lhs, rhs = math.cos(self.phi), math.sinh(self.a) * math.sinh(self.b)
        out.append(abs(lhs - rhs) / max(abs(lhs), 1e-300))
        lhs, rhs = math.cosh(self.alpha) * s, math.cosh(self.a)
        out.append(abs(lhs - rhs) / rhs)
        lhs, rhs = math.cosh(self.beta) * s, math.cosh(self.b)
        out.append(abs(lhs - rhs) / rhs)
        return out
