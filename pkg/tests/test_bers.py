import math
import random

import pytest
from hypothesis import given, strategies as st

from conecollar import bers as B
from conecollar.errors import InadmissibleSignatureError, InvalidEventError
from conecollar.surface import ADMISSIBLE_UP_TO, Signature

from .strategies import half_angles

PI = math.pi
ACOSH_5 = 2.2924316695611776878


def test_zone_formulas():
    z = B.ConeNeighborhood(PI / 4, ACOSH_5)
    assert B.zone_area(z) == pytest.approx(2 * PI, rel=1e-14)
    assert B.zone_boundary_length(z) == pytest.approx(0.5 * PI * math.sqrt(24.0), rel=1e-14)
    assert B.zone_boundary_length(z) == pytest.approx(7.69529898, rel=1e-8)
    assert B.zone_area(B.ConeNeighborhood(0.3, 0.0)) == 0.0
    assert B.zone_boundary_length(B.ConeNeighborhood(0.3, 0.0)) == 0.0
    with pytest.raises(ValueError):
        B.ConeNeighborhood(0.3, -1.0)


def test_max_radius():
    assert B.max_radius(PI / 4, 2 * PI) == pytest.approx(ACOSH_5, rel=1e-15)
    assert B.max_radius(PI / 4, 1e-14) < 1e-6
    with pytest.raises(ValueError):
        B.max_radius(PI / 4, 0.0)


@given(half_angles, st.floats(1e-6, 1e4))
def test_boundary_at_max_radius(phi, area):
    r = B.max_radius(phi, area)
    z = B.ConeNeighborhood(phi, r)
    length = B.zone_boundary_length(z)
    assert B.zone_area(z) == pytest.approx(area, rel=1e-9)
    assert length == pytest.approx(2 * phi * math.sqrt((1 + area / (2 * phi)) ** 2 - 1), rel=1e-9)
    assert length < area + 2 * phi


def test_case_bounds():
    assert B.case_bound("case1", Signature(0, 4)) == pytest.approx(4 * PI, rel=1e-15)
    assert B.case_bound("case2", Signature(2, 3)) == pytest.approx(20 * PI, rel=1e-15)
    sig = Signature(1, 3)
    unit = 2 * PI * sig.euler
    assert B.case_bound("case3", sig, 2 * unit) == pytest.approx(3 * unit, rel=1e-15)
    with pytest.raises(ValueError):
        B.case_bound("induction", sig)
    with pytest.raises(InadmissibleSignatureError):
        B.case_bound("case1", Signature(0, 3))


def test_bers_bound():
    assert B.bers_bound(Signature(0, 4)) == 8 * PI
    assert B.bers_bound(Signature(2, 0)) == 24 * PI
    assert B.bers_bound(Signature(1, 1)) == 4 * PI


def test_four_cones_single_event():
    # the piece left after one joker's hat is the other one
    ledger = B.run_ledger(Signature(0, 4), [("case2", (0, 1))])
    assert ledger.curve_bounds == [8 * PI]
    assert ledger.done


def test_four_cones_two_joker_hats():
    ledger = B.run_ledger(Signature(0, 4), [("case2", (0, 1)), ("case2", (2, 3))])
    assert len(ledger.curve_bounds) == 1
    assert ledger.records[1].merged
    assert ledger.merges == [(0, 0)]
    assert ledger.curve_bounds[0] <= B.bers_bound(Signature(0, 4))


def test_genus_two_induction():
    ledger = B.run_ledger(Signature(2, 0), [("induction",)] * 3)
    assert ledger.curve_bounds == pytest.approx([8 * PI, 16 * PI, 24 * PI], rel=1e-15)
    assert [r.step for r in ledger.records] == [1, 2, 3]


def test_invalid_events():
    with pytest.raises(InvalidEventError):
        B.run_ledger(Signature(0, 4), [("case1", (0,))])  # no genus to cut
    with pytest.raises(InvalidEventError):
        B.run_ledger(Signature(0, 4), [("case2", (0, 0))])
    with pytest.raises(InvalidEventError):
        B.run_ledger(Signature(0, 5), [("case2", (0, 1))])  # cones left over
    with pytest.raises(InvalidEventError):
        B.run_ledger(Signature(1, 1), [("induction",)])  # cone still present
    with pytest.raises(InvalidEventError):
        B.run_ledger(Signature(0, 5), [("case3", (0,), 0)])  # no boundary curve yet


def _random_ledgers(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        sig = Signature(*rng.choice(ADMISSIBLE_UP_TO))
        yield sig, B.run_ledger(sig, B.random_events(sig, rng))


def test_random_ledgers_respect_envelopes():
    for sig, ledger in _random_ledgers(200, 7):
        m = 3 * sig.genus - 3 + sig.n
        assert len(ledger.curve_bounds) == m
        for r in ledger.records:
            assert r.boundary_bound <= ledger.boundary_envelope(r.step)
        for k, b in enumerate(ledger.curve_bounds, 1):
            assert b <= ledger.envelope(k)
        assert max(ledger.curve_bounds) <= B.bers_bound(sig)
        assert ledger.cone_curves <= 2 * sig.n


def test_ledger_deterministic():
    sig = Signature(2, 3)
    events = B.random_events(sig, random.Random(3))
    a = B.run_ledger(sig, events).to_dict()
    b = B.run_ledger(sig, [e.to_dict() for e in events]).to_dict()
    assert a == b
    assert B.random_events(sig, random.Random(3)) == events


def test_event_round_trip():
    ev = B.LedgerEvent("case3", (2,), 1)
    assert B.LedgerEvent.from_dict(ev.to_dict()) == ev
    assert ev.kind is B.EventKind.CASE3
