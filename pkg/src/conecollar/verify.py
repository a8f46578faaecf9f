"""Closed forms against explicit half-plane constructions."""

import math
import random
from dataclasses import dataclass, field

from . import halfplane as hp
from . import trig
from .errors import InvalidHexagonError

SIDE_TOL = 1e-9
ANGLE_TOL = 1e-10


@dataclass
class OracleReport:
    family: str
    count: int = 0
    max_side_error: float = 0.0
    max_angle_error: float = 0.0
    worst: tuple = None
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def record(self, params, side_err, angle_err):
        self.count += 1
        if side_err > self.max_side_error:
            self.max_side_error, self.worst = side_err, params
        self.max_angle_error = max(self.max_angle_error, angle_err)
        if side_err > SIDE_TOL or angle_err > ANGLE_TOL:
            self.failures.append((params, side_err, angle_err))

    def line(self):
        status = "ok" if self.passed else f"{len(self.failures)} FAILED"
        return (f"{self.family:<13} n={self.count:<5} max side err {self.max_side_error:.2e}  "
                f"max right-angle err {self.max_angle_error:.2e}  {status}")


def _log_uniform(rng, lo, hi):
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


def _right_angle_error(angles):
    return max((abs(a - trig.HALF_PI) for a in angles), default=0.0)


def check_trirectangles(rng, count):
    rep = OracleReport("trirectangle")
    for _ in range(count):
        a = _log_uniform(rng, 0.02, 4.0)
        phi = rng.uniform(0.02, trig.HALF_PI - 0.02)
        poly = hp.construct_trirectangle(a, phi)
        built = hp.trirectangle_from_polygon(poly)
        exact = trig.Trirectangle.from_side(a, phi)
        err = max(abs(built.a - exact.a), abs(built.b - exact.b),
                  abs(built.alpha - exact.alpha), abs(built.beta - exact.beta),
                  abs(built.phi - exact.phi))
        right = [ang for k, ang in enumerate(poly.angles) if k != 2]
        rep.record((a, phi), err, _right_angle_error(right))
    return rep


def check_hexagons(rng, count):
    """Data with no right-angled hexagon is redrawn."""
    rep = OracleReport("hexagon")
    for _ in range(count):
        while True:
            a, b, gamma = (_log_uniform(rng, 0.05, 4.0) for _ in range(3))
            try:
                c_exact = trig.hexagon_opposite_side(a, b, gamma)
            except InvalidHexagonError:
                continue
            break
        poly = hp.construct_hexagon(a, b, gamma)
        _, x, c, y, _, _ = poly.sides
        err = max(abs(c - c_exact),
                  abs(x - trig.hexagon_middle_side(a, c_exact, b)),
                  abs(y - trig.hexagon_middle_side(c_exact, b, a)))
        rep.record((a, b, gamma), err, _right_angle_error(poly.angles))
    return rep


def check_pentagons(rng, count):
    rep = OracleReport("pentagon")
    for _ in range(count):
        phi = rng.uniform(0.02, trig.HALF_PI - 0.02)
        h1, h2 = (_log_uniform(rng, 0.05, 4.0) for _ in range(2))
        poly = hp.construct_pentagon(phi, h1, h2)
        err = abs(poly.sides[2] - trig.pentagon_opposite_side(h1, h2, phi))
        rep.record((phi, h1, h2), err, _right_angle_error(poly.angles[1:]))
    return rep


def check_joker_quadrilaterals(rng, count):
    """Symmetric halves only: there d1 = d2 has the closed form of the hat perpendicular."""
    rep = OracleReport("joker's hat")
    for _ in range(count):
        phi = rng.uniform(0.02, trig.HALF_PI - 0.02)
        length = _log_uniform(rng, 0.05, 8.0)
        poly = hp.construct_joker_quadrilateral(phi, phi, 0.5 * length)
        exact = trig.tri_joker_perp(0.25 * length, phi)
        err = max(abs(poly.sides[0] - exact), abs(poly.sides[2] - exact))
        rep.record((phi, length), err, _right_angle_error((poly.angles[0], poly.angles[3])))
    return rep


def run_oracle_suite(seed=0, count=1000, families=None):
    """Run the equivalence checks; returns a list of :class:`OracleReport`."""
    checks = {
        "trirectangle": check_trirectangles,
        "hexagon": check_hexagons,
        "pentagon": check_pentagons,
        "jokershat": check_joker_quadrilaterals,
    }
    rng = random.Random(seed)
    return [fn(rng, count) for name, fn in checks.items() if families is None or name in families]
