"""Admissible cone-surfaces described by a pants decomposition.

A surface is stored combinatorially: cone half-angles, partition curve
lengths, and for each pair of pants its three boundary slots.  A slot is
``Slot("curve", k)`` or ``Slot("cone", l)``.  Twists are not stored; nothing
computed in this package depends on them.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InadmissibleSignatureError
from .pants import DEGENERATE_TOL, make_pants, pants_area
from .trig import HALF_PI


@dataclass(frozen=True, order=True)
class Signature:
    genus: int
    n: int

    @property
    def admissible(self):
        g, n = self.genus, self.n
        return g >= 0 and n >= 0 and (g, n) >= (0, 4) and (g, n) != (1, 0)

    def require_admissible(self):
        if not self.admissible:
            raise InadmissibleSignatureError(
                f"signature (g, n) = ({self.genus}, {self.n}) is not admissible"
            )
        return self

    @property
    def euler(self):
        """2g - 2 + n: minus the Euler characteristic of the punctured surface."""
        return 2 * self.genus - 2 + self.n


def partition_size(sig):
    """Number of partition curves and of pants: (3g - 3 + n, 2g - 2 + n)."""
    sig.require_admissible()
    return 3 * sig.genus - 3 + sig.n, 2 * sig.genus - 2 + sig.n


class Slot(NamedTuple):
    kind: str  # "curve" or "cone"
    index: int


@dataclass(frozen=True)
class ConeSurface:
    genus: int
    half_angles: tuple
    lengths: tuple
    pants: tuple  # tuple of 3-tuples of Slot
    curve_ids: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "half_angles", tuple(self.half_angles))
        object.__setattr__(self, "lengths", tuple(self.lengths))
        object.__setattr__(self, "pants", tuple(tuple(Slot(*s) for s in p) for p in self.pants))
        if self.curve_ids is None:
            object.__setattr__(self, "curve_ids", tuple(f"c{k}" for k in range(len(self.lengths))))
        else:
            object.__setattr__(self, "curve_ids", tuple(self.curve_ids))

    @property
    def signature(self):
        return Signature(self.genus, len(self.half_angles))

    @property
    def phi_max(self):
        """Largest cone half-angle, or None on a surface without cone points."""
        return max(self.half_angles) if self.half_angles else None

    def piece(self, i):
        """The i-th pair of pants as a YPiece, VPiece or JokersHat."""
        slots = self.pants[i]
        lengths = [self.lengths[s.index] for s in slots if s.kind == "curve"]
        angles = [self.half_angles[s.index] for s in slots if s.kind == "cone"]
        return make_pants(lengths, angles)

    def pieces(self):
        return [self.piece(i) for i in range(len(self.pants))]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class PartitionCheckReport:
    checks: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def __str__(self):
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f": {c.detail}" if c.detail else "")
                 for c in self.checks]
        lines += [f"NOTE  {f}" for f in self.flags]
        return "\n".join(lines)


def validate_surface(s):
    """Check every structural invariant of ``s``; never raises."""
    rep = PartitionCheckReport()
    sig = s.signature
    rep.add("admissible signature", sig.admissible, f"(g, n) = ({sig.genus}, {sig.n})")
    if sig.admissible:
        m, npants = 3 * sig.genus - 3 + sig.n, 2 * sig.genus - 2 + sig.n
    else:
        m = npants = None
    rep.add("curve count", m is not None and len(s.lengths) == m,
            f"have {len(s.lengths)}, need 3g-3+n = {m}")
    rep.add("pants count", npants is not None and len(s.pants) == npants,
            f"have {len(s.pants)}, need 2g-2+n = {npants}")

    for l, phi in enumerate(s.half_angles):
        ok = isinstance(phi, (int, float)) and DEGENERATE_TOL <= phi <= HALF_PI - DEGENERATE_TOL
        rep.add(f"cone {l} angle", ok,
                "" if ok else f"cone angle out of range: 2*phi = {2 * phi!r} not in (0, pi)")
    for k, x in enumerate(s.lengths):
        ok = isinstance(x, (int, float)) and math.isfinite(x) and x >= DEGENERATE_TOL
        rep.add(f"curve {s.curve_ids[k]} length", ok, "" if ok else f"length {x!r}")

    uses = Counter()
    slots_ok = True
    for i, p in enumerate(s.pants):
        if len(p) != 3:
            rep.add(f"pants {i} slots", False, f"{len(p)} boundary slots")
            slots_ok = False
            continue
        for slot in p:
            limit = len(s.lengths) if slot.kind == "curve" else len(s.half_angles)
            if slot.kind not in ("curve", "cone") or not 0 <= slot.index < limit:
                rep.add(f"pants {i} slots", False, f"bad boundary reference {slot}")
                slots_ok = False
            uses[slot] += 1
        if sum(1 for slot in p if slot.kind == "cone") == 3:
            rep.add(f"pants {i} type", False, "three cone points")
            slots_ok = False
    for k in range(len(s.lengths)):
        if uses[Slot("curve", k)] != 2:
            rep.add(f"curve {s.curve_ids[k]} gluing", False,
                    f"appears {uses[Slot('curve', k)]} times, need 2")
            slots_ok = False
    for l in range(len(s.half_angles)):
        if uses[Slot("cone", l)] != 1:
            rep.add(f"cone {l} placement", False, f"appears {uses[Slot('cone', l)]} times, need 1")
            slots_ok = False
    rep.add("boundary slots", slots_ok)
    rep.add("connected", slots_ok and _connected(s))

    if (sig.genus, sig.n) == (1, 1):
        rep.flags.append("(1,1): all simple closed geodesics intersect; collar optimality differs")
    if (sig.genus, sig.n) == (0, 4):
        rep.flags.append("(0,4): sharp cone-collar constant depends on all four cone angles")
    return rep


def _connected(s):
    if not s.pants:
        return False
    owners = {}
    for i, p in enumerate(s.pants):
        for slot in p:
            if slot.kind == "curve":
                owners.setdefault(slot.index, []).append(i)
    seen, stack = {0}, [0]
    while stack:
        i = stack.pop()
        for slot in s.pants[i]:
            if slot.kind == "curve":
                for j in owners[slot.index]:
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
    return len(seen) == len(s.pants)


def gauss_bonnet_area(s):
    """2 pi (2g - 2 + n) - sum of full cone angles."""
    return 2.0 * math.pi * s.signature.euler - 2.0 * math.fsum(s.half_angles)


def total_pants_area(s):
    return math.fsum(pants_area(p) for p in s.pieces())


ADMISSIBLE_UP_TO = [(g, n) for g in range(4) for n in range(7) if Signature(g, n).admissible]


def random_surface(rng, genus=None, n=None, length_range=(0.05, 8.0),
                   angle_range=(0.05, HALF_PI - 0.05)):
    """Random valid surface; signature drawn from g <= 3, n <= 6 unless given.

    Lengths are log-uniform and half-angles uniform on the given ranges.
    """
    if genus is None or n is None:
        genus, n = rng.choice(ADMISSIBLE_UP_TO)
    Signature(genus, n).require_admissible()
    m, npants = 3 * genus - 3 + n, 2 * genus - 2 + n
    while True:
        pants = _random_gluing(rng, npants, n)
        if pants is not None:
            break
    lo, hi = length_range
    lengths = [math.exp(rng.uniform(math.log(lo), math.log(hi))) for _ in range(m)]
    angles = [rng.uniform(*angle_range) for _ in range(n)]
    return ConeSurface(genus, angles, lengths, pants)


def _random_gluing(rng, npants, n):
    """Connected gluing pattern of ``npants`` pants with ``n`` cone slots, or None."""
    cones_per = [0] * npants
    for l in range(n):
        options = [i for i in range(npants) if cones_per[i] < 2]
        cones_per[rng.choice(options)] += 1
    free = [3 - c for c in cones_per]
    order = sorted(range(npants), key=lambda i: (-free[i], rng.random()))
    remaining = free[:]
    edges = []
    # spanning tree first, attaching each new pants to one already placed
    for pos in range(1, npants):
        i = order[pos]
        placed = [j for j in order[:pos] if remaining[j] > 0]
        if not placed or remaining[i] == 0:
            return None
        j = rng.choice(placed)
        edges.append((i, j))
        remaining[i] -= 1
        remaining[j] -= 1
    stubs = [i for i in range(npants) for _ in range(remaining[i])]
    if len(stubs) % 2:
        return None
    rng.shuffle(stubs)
    edges += [(stubs[k], stubs[k + 1]) for k in range(0, len(stubs), 2)]
    slots = [[] for _ in range(npants)]
    cone = 0
    for i in range(npants):
        for _ in range(cones_per[i]):
            slots[i].append(Slot("cone", cone))
            cone += 1
    for k, (i, j) in enumerate(edges):
        slots[i].append(Slot("curve", k))
        slots[j].append(Slot("curve", k))
    for p in slots:
        rng.shuffle(p)
    return [tuple(p) for p in slots]
