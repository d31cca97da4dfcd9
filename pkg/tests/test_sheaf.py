import random
from itertools import product

import pytest

from conftest import QX, Z, Z12
from zariski.errors import PreconditionError, UsageError
from zariski.lattice import LatticeElt, bottom, d_of, lat_eq, top
from zariski.localization import LocRing, loc_eq
from zariski.sampling import compatible_family, incompatible_family, perturb
from zariski.sheaf import (
    check_compatible,
    cover_check,
    cover_failure,
    disagreement,
    join_of_basic,
    pullback_instance_check,
    shape_category,
)
from zariski.structure import spread

x = QX.gen()


def test_shape_category_examples():
    assert shape_category(0).objects == () and shape_category(0).arrows == ()
    two = shape_category(2)
    assert len(two.objects) == 3 and len(two.arrows) == 5
    three = shape_category(3)
    assert len(three.objects) == 6 and len(three.arrows) == 12
    with pytest.raises(UsageError):
        shape_category(-1)


@pytest.mark.parametrize("n", range(7))
def test_shape_category_composition(n):
    cat = shape_category(n)
    assert len(cat.objects) == n + n * (n - 1) // 2
    ids = {a.dom: a for a in cat.arrows if a.kind == "id"}
    assert set(ids) == set(cat.objects)
    for f, g in product(cat.arrows, repeat=2):
        comp = cat.compose(g, f)
        if f.cod != g.dom:
            assert comp is None
            continue
        # only identities compose nontrivially: there are no chains of length two
        assert f.kind == "id" or g.kind == "id"
        assert comp == (g if f.kind == "id" else f)
    for a, b in product(cat.objects, repeat=2):
        assert len(cat.hom(a, b)) <= 1
    for arrow in cat.arrows:
        if arrow.kind != "id":
            _, i, j = arrow.cod
            assert arrow.dom == ("sing", i if arrow.kind == "left" else j)


def test_cover_examples():
    c = cover_check(LatticeElt(Z, (1,)), [2, 3])
    assert c is not None and c.verify()
    assert cover_check(LatticeElt(Z, (6,)), [2, 3]) is None
    assert cover_failure(LatticeElt(Z, (6,)), [2, 3]) == "2 not in sqrt<6>"
    c = cover_check(LatticeElt(Z, (6,)), [6, 18])
    assert c is not None and c.verify()
    assert cover_failure(LatticeElt(Z, (6,)), [6, 18]) is None


def test_empty_cover_law():
    for ring in (Z, Z12, QX):
        c = cover_check(bottom(ring), [])
        assert c is not None and c.parts == ()
        fam = check_compatible(c, [])
        assert fam is not None and fam.sections == ()
        assert cover_check(bottom(ring), [ring.one]) is None


def test_compatibility_examples():
    cover = cover_check(top(Z), [2, 3])
    fam = check_compatible(cover, [LocRing(Z(2))(14, 1), LocRing(Z(3))(21, 1)])
    assert fam is not None and fam.verify()
    assert check_compatible(cover, [LocRing(Z(2))(1, 1), LocRing(Z(3))(1, 1)]) is None
    assert disagreement(cover, [LocRing(Z(2))(1, 1), LocRing(Z(3))(1, 1)]) == (0, 1)
    const = [LocRing(Z(p)).from_base(5) for p in (2, 3)]
    assert check_compatible(cover, const) is not None


def test_sections_must_match_cover():
    cover = cover_check(top(Z), [2, 3])
    with pytest.raises(UsageError):
        check_compatible(cover, [LocRing(Z(2)).one])
    with pytest.raises(UsageError):
        check_compatible(cover, [LocRing(Z(3)).one, LocRing(Z(2)).one])


COVERS = [
    (Z, 1, (2, 3)),
    (Z, 1, (6, 10, 15)),
    (Z, 6, (12, 18)),
    (Z12, 1, (2, 3)),
    (Z12, 2, (2, 10)),
    (QX, 1, (x, x - 1)),
    (QX, x, (x**2, x**2 - x, x**3 + x)),
]


@pytest.mark.parametrize("ring,h,parts", COVERS, ids=lambda v: str(v))
def test_compatibility_symmetric_and_representation_free(ring, h, parts):
    h, parts = ring(h), ring.elems(*parts)
    cover = cover_check(d_of(h), parts)
    assert cover is not None
    rng = random.Random(str(parts))
    for _ in range(40):
        _, fam = compatible_family(h, parts, rng)
        assert check_compatible(cover, fam) is not None
        rev = cover_check(d_of(h), parts[::-1])
        assert (check_compatible(rev, fam[::-1]) is None) == (check_compatible(cover, fam) is None)
        swapped = tuple(perturb(s, rng) for s in fam)
        assert check_compatible(cover, swapped) is not None
        if not LocRing(parts[0] * parts[-1]).is_zero_ring:
            bad = incompatible_family(h, parts, rng)
            assert check_compatible(cover, bad) is None
            assert check_compatible(rev, bad[::-1]) is None


def test_join_of_basic():
    assert lat_eq(join_of_basic(Z, [2, 3]), top(Z))
    assert join_of_basic(Z, []) == bottom(Z)


def test_pullback_examples():
    A, B = LocRing(Z(2)), LocRing(Z(3))
    rep = pullback_instance_check(Z(2), Z(3), Z(1), [(A(14, 1), B(21, 1), True), (A(1, 1), B(1, 1), False)])
    assert rep.ok, rep
    assert any(c.name == "#0 glue unique" and c.detail == "7" for c in rep.checks)
    assert any(c.name == "R[1/0]: 0 = 1" for c in rep.checks)


def test_pullback_flags_wrong_expectation():
    A, B = LocRing(Z(2)), LocRing(Z(3))
    rep = pullback_instance_check(Z(2), Z(3), Z(1), [(A(1, 1), B(1, 1), True)])
    assert not rep.ok


def test_pullback_needs_cover():
    with pytest.raises(PreconditionError):
        pullback_instance_check(Z(2), Z(3), Z(5), [])


def test_zero_ring_sections():
    dead = LocRing(Z(0))
    rng = random.Random(0)
    for _ in range(20):
        a = dead(rng.randint(-9, 9), rng.randint(0, 3))
        assert loc_eq(a, dead.zero)
    for s in spread(LocRing(Z(1)).from_base(4), [0]):
        assert loc_eq(s, s.loc.zero)
