"""Acceptance criteria, one test each.

Every test appends a single ``criterion N: PASS|FAIL`` line to ``VERDICTS``;
``conftest.py`` prints them at the end of the run.
"""

import math
import random
import sys
import time

import pytest

from conecollar import bers as B
from conecollar import collars as C
from conecollar import trig
from conecollar.surface import (ADMISSIBLE_UP_TO, Signature, gauss_bonnet_area, random_surface,
                                total_pants_area, validate_surface)
from conecollar.verify import SIDE_TOL, ANGLE_TOL, run_oracle_suite

VERDICTS = []

PHIS = [0.02 + (trig.HALF_PI - 0.04) * k / 49 for k in range(50)]
LENGTHS = [0.05 * (20.0 / 0.05) ** (k / 49) for k in range(50)]
GRID = [(l, phi) for l in LENGTHS for phi in PHIS]
SURFACE_SEED = 20240
N_SURFACES = 1000


def verdict(n, ok, detail, started):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}  ({time.perf_counter() - started:.2f} s)"
    VERDICTS.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def surfaces():
    rng = random.Random(SURFACE_SEED)
    return [random_surface(rng) for _ in range(N_SURFACES)]


def test_criterion_1_sum_identity():
    t0 = time.perf_counter()
    worst = 0.0
    for length, phi in GRID:
        lhs = math.sinh(C.geodesic_collar_width(length, phi) + C.cone_collar_width(phi))
        rhs = trig.collar_sum_sinh(length, phi)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 1.0
    assert verdict(1, ok, f"max relative error {worst:.2e} on {len(GRID)} grid points", t0)


def test_criterion_2_joker_perpendicular_beats_collars():
    t0 = time.perf_counter()
    margins = [trig.tri_joker_perp(0.25 * length, phi)
               - (C.geodesic_collar_width(length, phi) + C.cone_collar_width(phi))
               for length, phi in GRID]
    elapsed = time.perf_counter() - t0
    ok = min(margins) > 0.0 and elapsed < 1.0
    assert verdict(2, ok, f"min margin {min(margins):.3e} on {len(GRID)} grid points", t0)


def test_criterion_3_oracle_equivalence():
    t0 = time.perf_counter()
    reports = run_oracle_suite(seed=3, count=1000, families=("trirectangle", "hexagon"))
    elapsed = time.perf_counter() - t0
    side = max(r.max_side_error for r in reports)
    angle = max(r.max_angle_error for r in reports)
    ok = (len(reports) == 2 and all(r.count == 1000 for r in reports)
          and side <= SIDE_TOL and angle <= ANGLE_TOL and elapsed < 10.0)
    assert verdict(3, ok, f"2x1000 polygons, max side err {side:.2e}, max right-angle err {angle:.2e}", t0)


def test_criterion_4_certification(surfaces):
    t0 = time.perf_counter()
    invalid = sum(1 for s in surfaces if not validate_surface(s).passed)
    records = 0
    bad = 0
    least = math.inf
    for s in surfaces:
        cert = C.certify_disjoint(s)
        records += len(cert.records)
        bad += sum(1 for r in cert.records if not r.margin > 0.0)
        least = min(least, cert.min_margin)
    elapsed = time.perf_counter() - t0
    ok = invalid == 0 and bad == 0 and elapsed < 30.0
    assert verdict(4, ok, f"{len(surfaces)} surfaces, {invalid} invalid, {records} pair records, "
                          f"{bad} non-positive, min margin {least:.3e}", t0)


def test_criterion_5_area_accounting(surfaces):
    t0 = time.perf_counter()
    worst = 0.0
    over = 0
    for s in surfaces:
        area = gauss_bonnet_area(s)
        worst = max(worst, abs(total_pants_area(s) - area) / area)
        over += C.total_collar_area(s) > area
    ok = worst <= 1e-12 and over == 0
    assert verdict(5, ok, f"max relative area error {worst:.2e}, {over} surfaces with collar area > area", t0)


def test_criterion_6_bers_arithmetic(surfaces):
    t0 = time.perf_counter()
    eps = sys.float_info.epsilon
    exact = (abs(B.bers_bound(Signature(0, 4)) - 8 * math.pi) <= eps * 8 * math.pi
             and abs(B.bers_bound(Signature(2, 0)) - 24 * math.pi) <= eps * 24 * math.pi)

    # ledger: stored bounds are exclusive (length < bound), so bound <= envelope
    # gives the strict length inequalities
    rng = random.Random(66)
    ledger_bad = 0
    for _ in range(200):
        sig = Signature(*rng.choice(ADMISSIBLE_UP_TO))
        ledger = B.run_ledger(sig, B.random_events(sig, rng))
        ledger_bad += sum(1 for r in ledger.records if r.boundary_bound > ledger.boundary_envelope(r.step))
        ledger_bad += sum(1 for k, b in enumerate(ledger.curve_bounds, 1) if b > ledger.envelope(k))

    # zone chain on every cone of every sampled surface, A = surface area
    first_bad = second_bad = inputs = 0
    failing = set()
    for s in surfaces:
        area = gauss_bonnet_area(s)
        for i, phi in enumerate(s.half_angles):
            inputs += 1
            length = B.zone_boundary_length(B.ConeNeighborhood(phi, B.max_radius(phi, area)))
            first_bad += not length < area + 2 * phi
            # 2 pi (2g - 2 + n) - (A + 2 phi_i) = 2 * (sum of the other half-angles), exactly
            slack = 2.0 * math.fsum(p for j, p in enumerate(s.half_angles) if j != i)
            if not slack > 0.0:
                second_bad += 1
                failing.add((s.genus, len(s.half_angles)))
    ok = exact and ledger_bad == 0 and first_bad == 0 and second_bad == 0
    assert verdict(6, ok, f"exact bounds {'ok' if exact else 'off'}, 200 ledgers with {ledger_bad} violations, "
                          f"zone chain on {inputs} inputs: {first_bad} fail l < A + 2phi, "
                          f"{second_bad} fail A + 2phi < 2pi(2g-2+n) (signatures {sorted(failing)})", t0)


PROBE_LENGTHS = [1.0, 2.0, 4.0, 8.0, 16.0, 32.0]


def test_criterion_7_sharpness_probe():
    t0 = time.perf_counter()
    not_decreasing = []
    no_threshold = []
    plateau = []
    cone_thresholds = []
    for phi in (math.pi / 6, math.pi / 4, math.pi / 3):
        for length in (1.0, 2.0, 4.0):
            gaps = [C.optimality_probe(phi, length, x) for x in PROBE_LENGTHS]
            if not all(a > b for a, b in zip(gaps, gaps[1:])):
                not_decreasing.append((phi, length))
            if C.probe_threshold(C.optimality_probe, phi, length, 1e-3) is None:
                no_threshold.append((round(phi, 4), length))
                plateau.append(gaps[-1])
            cone_thresholds.append(C.probe_threshold(C.cone_optimality_probe, phi, length, 1e-3))
    elapsed = time.perf_counter() - t0
    ok = not not_decreasing and not no_threshold and elapsed < 5.0
    detail = (f"9 cases, {len(not_decreasing)} not decreasing, {len(no_threshold)} never below 1e-3"
              + (f" (gap plateaus between {min(plateau):.4f} and {max(plateau):.4f})" if plateau else ""))
    cone_ok = all(t is not None for t in cone_thresholds)
    if cone_ok:
        detail += f"; info: cone-collar gap drops below 1e-3 by l' = {max(cone_thresholds):.2f} in all cases"
    assert verdict(7, ok, detail, t0)


def test_criterion_8_limit_consistency():
    t0 = time.perf_counter()
    worst = 0.0
    for length in LENGTHS:
        classical = math.asinh(1.0 / math.sinh(0.5 * length))
        errs = [classical - C.geodesic_collar_width(length, phi) for phi in (1e-2, 1e-4, 1e-6)]
        # O(phi^2): each step of 1e-2 in phi should shrink the error by 1e4
        for a, b in zip(errs, errs[1:]):
            worst = max(worst, abs(a / b / 1e4 - 1.0))
    torus_ok = all(C.torus_sharp_width(phi) > C.cone_collar_width(phi) for phi in PHIS)
    ok = worst < 0.01 and torus_ok
    assert verdict(8, ok, f"error ratio off 1e4 by at most {worst:.2e}; torus width > cone width "
                          f"{'on' if torus_ok else 'NOT on'} all {len(PHIS)} angles", t0)
