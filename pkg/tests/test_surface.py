import math
import random

import pytest

from conecollar import surface as S
from conecollar.errors import InadmissibleSignatureError
from conecollar.surface import ConeSurface, Signature, Slot

QUARTER = math.pi / 4


def four_cones(phi=QUARTER, length=2.0):
    pants = [
        (Slot("cone", 0), Slot("cone", 1), Slot("curve", 0)),
        (Slot("cone", 2), Slot("cone", 3), Slot("curve", 0)),
    ]
    return ConeSurface(0, [phi] * 4, [length], pants)


def genus_two(lengths=(1.0, 2.5, 0.7)):
    pants = [tuple(Slot("curve", k) for k in range(3))] * 2
    return ConeSurface(2, [], lengths, pants)


def test_partition_size():
    assert S.partition_size(Signature(0, 4)) == (1, 2)
    assert S.partition_size(Signature(2, 0)) == (3, 2)
    assert S.partition_size(Signature(1, 1)) == (1, 1)
    with pytest.raises(InadmissibleSignatureError):
        S.partition_size(Signature(0, 3))


@pytest.mark.parametrize("sig, ok", [
    ((0, 3), False), ((1, 0), False), ((0, 4), True), ((1, 1), True), ((2, 0), True), ((0, 0), False),
])
def test_admissible(sig, ok):
    assert Signature(*sig).admissible is ok


def test_valid_examples():
    rep = S.validate_surface(four_cones())
    assert rep.passed, str(rep)
    assert any("(0,4)" in f for f in rep.flags)
    assert S.validate_surface(genus_two()).passed


def test_three_cones_fail_admissibility():
    s = ConeSurface(0, [0.5, 0.5, 0.5], [], [(Slot("cone", 0), Slot("cone", 1), Slot("cone", 2))])
    rep = S.validate_surface(s)
    assert not rep.passed
    names = {c.name for c in rep.failures()}
    assert "admissible signature" in names
    assert "pants 0 type" in names


def test_bad_angle_reported():
    rep = S.validate_surface(four_cones(phi=2.0))
    details = " ".join(c.detail for c in rep.failures())
    assert "cone angle out of range" in details


def test_gluing_errors_reported():
    s = four_cones()
    bad = ConeSurface(0, s.half_angles, s.lengths, [s.pants[0], s.pants[0]])
    names = {c.name for c in S.validate_surface(bad).failures()}
    assert "cone 0 placement" in names and "cone 2 placement" in names
    dangling = ConeSurface(0, s.half_angles, s.lengths,
                           [s.pants[0], (Slot("cone", 2), Slot("cone", 3), Slot("curve", 5))])
    assert not S.validate_surface(dangling).passed


def test_disconnected_reported():
    # two one-holed tori glued to nothing: slot counts fine, not connected
    pants = [(Slot("curve", 0), Slot("curve", 0), Slot("cone", 0)),
             (Slot("curve", 1), Slot("curve", 1), Slot("cone", 1))]
    rep = S.validate_surface(ConeSurface(1, [0.5, 0.5], [1.0, 1.0], pants))
    assert [c.name for c in rep.failures()] == ["connected"]


def test_gauss_bonnet_examples():
    assert S.gauss_bonnet_area(four_cones()) == pytest.approx(2 * math.pi, rel=1e-15)
    assert S.total_pants_area(four_cones()) == pytest.approx(2 * math.pi, rel=1e-15)
    assert S.gauss_bonnet_area(genus_two()) == pytest.approx(4 * math.pi, rel=1e-15)
    near_flat = four_cones(phi=math.pi / 2 - 1e-7)
    assert 0.0 < S.gauss_bonnet_area(near_flat) < 1e-5


def test_one_cone_torus():
    s = ConeSurface(1, [0.8], [1.5], [(Slot("curve", 0), Slot("curve", 0), Slot("cone", 0))])
    rep = S.validate_surface(s)
    assert rep.passed
    assert any("(1,1)" in f for f in rep.flags)
    assert S.total_pants_area(s) == pytest.approx(S.gauss_bonnet_area(s), rel=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_random_surfaces_valid(seed):
    rng = random.Random(seed)
    for _ in range(60):
        s = S.random_surface(rng)
        rep = S.validate_surface(s)
        assert rep.passed, str(rep)
        assert S.total_pants_area(s) == pytest.approx(S.gauss_bonnet_area(s), rel=1e-12)


def test_random_surface_fixed_signature():
    rng = random.Random(1)
    s = S.random_surface(rng, genus=3, n=6)
    assert s.signature == Signature(3, 6)
    assert len(s.lengths) == 12 and len(s.pants) == 10
    with pytest.raises(InadmissibleSignatureError):
        S.random_surface(rng, genus=0, n=3)


def test_random_surface_deterministic():
    a = S.random_surface(random.Random(42))
    b = S.random_surface(random.Random(42))
    assert a == b
