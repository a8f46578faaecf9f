"""Length bookkeeping for the partition construction on cone-surfaces.

Cone neighbourhoods grow until one of three things happens; each outcome
produces new partition curves with an explicit length bound.  The ledger
replays a supplied sequence of such outcomes and records every bound.  It
models only counts and lengths: the remaining piece ``M^j`` is tracked by
its genus, its cone points and its boundary curves.

Stored bounds are exclusive: a curve with bound B has length < B.  Every
bound is a whole multiple of the unit 2 pi (2g - 2 + n), so the ledger
counts units and converts to lengths on the way out; comparisons against
the envelopes are then exact.
"""

import copy
import itertools
import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidEventError
from .surface import Signature
from .trig import acosh_guarded


@dataclass(frozen=True)
class ConeNeighborhood:
    phi: float
    r: float

    def __post_init__(self):
        if not self.r >= 0.0:
            raise ValueError(f"radius must be nonnegative, got {self.r!r}")


def zone_area(z):
    return 2.0 * z.phi * (math.cosh(z.r) - 1.0)


def zone_boundary_length(z):
    return 2.0 * z.phi * math.sinh(z.r)


def max_radius(phi, surface_area):
    """Radius at which the cone neighbourhood would have the whole surface area."""
    if not surface_area > 0.0:
        raise ValueError("surface area must be positive")
    return acosh_guarded(1.0 + surface_area / (2.0 * phi))


class EventKind(str, Enum):
    CASE1 = "case1"  # a neighbourhood boundary touches itself
    CASE1_CONE = "case1_cone"  # ... and one of the two loops surrounds another cone point
    CASE2 = "case2"  # two neighbourhood boundaries meet
    CASE3 = "case3"  # a neighbourhood boundary meets a boundary curve of M^j
    INDUCTION = "induction"  # no cone points left; one more curve from the collar argument


@dataclass(frozen=True)
class LedgerEvent:
    kind: EventKind
    cones: tuple = ()
    curve: int = None  # CASE3: the boundary curve met

    def __post_init__(self):
        object.__setattr__(self, "kind", EventKind(self.kind))
        object.__setattr__(self, "cones", tuple(self.cones))

    def to_dict(self):
        d = {"kind": self.kind.value, "cones": list(self.cones)}
        if self.curve is not None:
            d["curve"] = self.curve
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["kind"], tuple(d.get("cones", ())), d.get("curve"))


def case_bound(kind, sig, incoming_boundary_bound=0.0):
    """Length bound for a curve produced by a single event."""
    unit = 2.0 * math.pi * sig.require_admissible().euler
    kind = EventKind(kind)
    if kind in (EventKind.CASE1, EventKind.CASE1_CONE):
        return unit
    if kind is EventKind.CASE2:
        return 2.0 * unit
    if kind is EventKind.CASE3:
        return incoming_boundary_bound + unit
    raise ValueError(f"no single-event bound for {kind}")


def bers_bound(sig):
    """4 pi (3g - 3 + n)(2g - 2 + n)."""
    sig.require_admissible()
    return 2 * (3 * sig.genus - 3 + sig.n) * _unit(sig)


def _unit(sig):
    return 2.0 * math.pi * sig.euler


@dataclass
class StepRecord:
    step: int  # j after the event; unchanged for merged events
    event: LedgerEvent
    new_curves: list
    boundary_units: int
    boundary_bound: float
    merged: bool = False


@dataclass
class Ledger:
    signature: Signature
    step: int = 0
    boundary_units: int = 0
    curve_units: list = field(default_factory=list)
    records: list = field(default_factory=list)
    removed: list = field(default_factory=list)  # (cones, curves) of each removed pants
    merges: list = field(default_factory=list)
    cone_steps: int = 0
    cone_curves: int = 0
    # state of the remaining piece M^j
    genus: int = 0
    cones: set = field(default_factory=set)
    boundary: list = field(default_factory=list)
    done: bool = False

    @property
    def unit(self):
        return _unit(self.signature)

    @property
    def boundary_bound(self):
        return self.boundary_units * self.unit

    @property
    def curve_bounds(self):
        return [u * self.unit for u in self.curve_units]

    @property
    def needed(self):
        """Curves still missing in a pants decomposition of M^j."""
        if self.done:
            return 0
        return 3 * self.genus - 3 + len(self.cones) + len(self.boundary)

    def envelope(self, k):
        """The k-th curve's length is below 4 pi k (2g - 2 + n)."""
        return 2 * k * self.unit

    def boundary_envelope(self, j):
        return 2 * j * self.unit

    def to_dict(self):
        return {
            "genus": self.signature.genus,
            "n": self.signature.n,
            "steps": [
                {"step": r.step, "event": r.event.to_dict(), "new_curves": r.new_curves,
                 "boundary_bound": r.boundary_bound, "merged": r.merged}
                for r in self.records
            ],
            "curve_bounds": self.curve_bounds,
            "merges": [list(m) for m in self.merges],
            "bers_bound": bers_bound(self.signature),
        }


def _removed_cone_owner(ledger, cone):
    for idx, (cones, curves) in enumerate(ledger.removed):
        if cone in cones:
            return idx
    return None


def _new_curve(ledger, units):
    ledger.curve_units.append(units)
    return len(ledger.curve_units) - 1


def _record(ledger, ev, new, merged=False):
    ledger.records.append(StepRecord(ledger.step, ev, list(new), ledger.boundary_units,
                                     ledger.boundary_bound, merged))


def _settle(ledger, new_curves):
    """Remove M^j if it has become a pair of pants, merge if it is an annulus."""
    if ledger.needed == 0 and ledger.genus == 0:
        ledger.removed.append((frozenset(ledger.cones), tuple(ledger.boundary)))
        ledger.cones = set()
        ledger.boundary = []
        ledger.done = True
    elif ledger.needed < 0:
        if ledger.genus == 0 and not ledger.cones and len(ledger.boundary) == 2:
            keep, drop = sorted(ledger.boundary)
            ledger.curve_units[keep] = min(ledger.curve_units[keep], ledger.curve_units[drop])
            del ledger.curve_units[drop]
            new_curves[:] = sorted({keep if c == drop else c for c in new_curves})
            ledger.merges.append((keep, drop))
            ledger.boundary = []
            ledger.done = True
        else:
            raise InvalidEventError("event leaves a disc or sphere behind")


def _apply(ledger, ev):
    kind = ev.kind
    if ledger.done and kind is not EventKind.INDUCTION:
        # only a restatement of an already removed joker's hat is allowed
        if kind in (EventKind.CASE2, EventKind.CASE1_CONE) and len(ev.cones) == 2:
            owners = {_removed_cone_owner(ledger, c) for c in ev.cones}
            if len(owners) == 1 and None not in owners:
                cones, curves = ledger.removed[owners.pop()]
                if set(ev.cones) == set(cones) and len(curves) == 1:
                    _record(ledger, ev, [curves[0]], merged=True)
                    ledger.merges.append((curves[0], curves[0]))
                    return
        raise InvalidEventError(f"{kind.value} event after the decomposition is complete")

    if kind is EventKind.INDUCTION:
        if ledger.cones:
            raise InvalidEventError("induction step while cone points remain")
        if ledger.needed <= 0:
            raise InvalidEventError("induction step on a finished decomposition")
        ledger.boundary_units += 2
        new = [_new_curve(ledger, ledger.boundary_units)]
        ledger.step += 1
        _record(ledger, ev, new)
        # bookkeeping only: complexity drops by one per curve
        ledger.boundary.append(new[0])
        ledger.genus, ledger.boundary = _induction_topology(ledger)
        if ledger.needed == 0:
            ledger.done = True
        return

    for c in ev.cones:
        if c not in ledger.cones:
            raise InvalidEventError(f"cone {c} is not on the remaining surface")
    if len(set(ev.cones)) != len(ev.cones):
        raise InvalidEventError("repeated cone in event")

    if kind is EventKind.CASE1:
        if len(ev.cones) != 1:
            raise InvalidEventError("case1 takes exactly one cone")
        if ledger.genus < 1:
            raise InvalidEventError("case1 with two essential loops needs genus >= 1 "
                                    "(use case1_cone on genus 0)")
        new = [_new_curve(ledger, 1), _new_curve(ledger, 1)]
        ledger.genus -= 1
        ledger.cones -= set(ev.cones)
        ledger.boundary += new
        increment = 2
    elif kind in (EventKind.CASE1_CONE, EventKind.CASE2):
        if len(ev.cones) != 2:
            raise InvalidEventError(f"{kind.value} takes exactly two cones")
        bound = 1 if kind is EventKind.CASE1_CONE else 2
        new = [_new_curve(ledger, bound)]
        ledger.cones -= set(ev.cones)
        ledger.boundary += new
        increment = bound
    elif kind is EventKind.CASE3:
        if len(ev.cones) != 1:
            raise InvalidEventError("case3 takes exactly one cone")
        if ev.curve not in ledger.boundary:
            raise InvalidEventError(f"curve {ev.curve} is not a boundary curve of M^j")
        bound = ledger.curve_units[ev.curve] + 1
        new = [_new_curve(ledger, bound)]
        ledger.cones -= set(ev.cones)
        ledger.boundary.remove(ev.curve)
        ledger.boundary += new
        increment = 1
    else:
        raise InvalidEventError(f"unknown event {kind}")

    _settle(ledger, new)
    ledger.removed.append((frozenset(ev.cones), tuple(new)))
    ledger.step += 1
    ledger.cone_steps += 1
    ledger.cone_curves += len(new)
    ledger.boundary_units += increment
    _record(ledger, ev, new)


def _induction_topology(ledger):
    """Genus and boundary of M^j after cutting along one more curve.

    Only the complexity count matters for the bounds, so a non-separating
    cut is assumed while genus remains, a separating one afterwards.
    """
    g, b = ledger.genus, ledger.boundary
    if g >= 1:
        return g - 1, b + [b[-1]]
    # a separating curve on a planar piece splits off a pair of pants
    # bounded by two old boundary curves and the new one
    return 0, b[2:]


def run_ledger(sig, events):
    """Replay ``events`` on a surface of signature ``sig`` and check every bound."""
    sig.require_admissible()
    ledger = Ledger(sig, genus=sig.genus, cones=set(range(sig.n)))
    for ev in events:
        if not isinstance(ev, LedgerEvent):
            ev = LedgerEvent.from_dict(ev) if isinstance(ev, dict) else LedgerEvent(*ev)
        _apply(ledger, ev)
    if ledger.cones:
        raise InvalidEventError(f"cone points {sorted(ledger.cones)} were never removed")
    m = 3 * sig.genus - 3 + sig.n
    if len(ledger.curve_units) != m:
        raise InvalidEventError(f"events produced {len(ledger.curve_units)} curves, need {m}")
    check_ledger(ledger)
    return ledger


def check_ledger(ledger):
    """Assert the step and per-curve envelopes; raises AssertionError on violation."""
    n = ledger.signature.n
    assert ledger.cone_curves <= 2 * n, "cone phase used more than 2n curves"
    assert ledger.cone_steps <= max(ledger.cone_curves, 0), "more cone steps than curves"
    for r in ledger.records:
        assert r.boundary_units <= 2 * r.step, r
    for k, u in enumerate(ledger.curve_units, 1):
        assert u <= 2 * k, (k, u)
    return True


def legal_events(ledger):
    """Every event that ``_apply`` would accept in the current state."""
    if ledger.done:
        return []
    if not ledger.cones:
        return [LedgerEvent(EventKind.INDUCTION)]
    cones = sorted(ledger.cones)
    candidates = [LedgerEvent(EventKind.CASE1, (j,)) for j in cones]
    for j, k in itertools.combinations(cones, 2):
        candidates += [LedgerEvent(EventKind.CASE1_CONE, (j, k)), LedgerEvent(EventKind.CASE2, (j, k))]
    candidates += [LedgerEvent(EventKind.CASE3, (j,), i) for j in cones for i in ledger.boundary]
    out = []
    for ev in candidates:
        trial = copy.deepcopy(ledger)
        try:
            _apply(trial, ev)
        except InvalidEventError:
            continue
        out.append(ev)
    return out


def random_events(sig, rng):
    """Uniformly random legal event sequence that completes a decomposition."""
    sig.require_admissible()
    ledger = Ledger(sig, genus=sig.genus, cones=set(range(sig.n)))
    events = []
    while not ledger.done:
        options = legal_events(ledger)
        if not options:
            raise InvalidEventError(f"dead end after {events}")
        ev = rng.choice(options)
        _apply(ledger, ev)
        events.append(ev)
    return events
