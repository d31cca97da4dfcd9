import random

import pytest

from conftest import QX, QXY, Z, Z12
from zariski.errors import PreconditionError
from zariski.lattice import LatticeElt, bottom, d_of, top
from zariski.localization import LocRing, loc_eq, simplify
from zariski.sampling import compatible_family, perturb, random_elem, random_loc_elem
from zariski.sheaf import check_compatible, cover_check
from zariski.structure import (
    glue,
    glue_trace,
    global_section,
    make_section,
    restrict_basic,
    restrict_section,
    section_eq,
    spread,
    top_roundtrip,
)

x = QX.gen()


def test_glue_integer_trace():
    A, B = LocRing(Z(2)), LocRing(Z(3))
    tr = glue_trace(Z(1), Z.elems(2, 3), [A(14, 1), B(21, 1)])
    assert (tr.d, tr.n, tr.big_d) == (1, 0, 1)
    assert tr.scaled == Z.elems(14, 21)
    ht = Z(1) ** tr.t
    assert tr.bezout[0] * Z(2) + tr.bezout[1] * Z(3) == ht
    assert simplify(tr.result) == LocRing(Z(1))(7, 0)
    # the other Bezout combination -2 + 3 = 1 gives the same section
    other = LocRing(Z(1))(-1 * tr.scaled[0] + 1 * tr.scaled[1], 0)
    assert loc_eq(other, tr.result)


def test_glue_polynomial_trace():
    A, B = LocRing(x), LocRing(x - 1)
    a, b = A(x**3 + x, 1), B(x**3 - x**2 + x - 1, 1)
    assert (x**3 + x) * (x - 1) == (x**3 - x**2 + x - 1) * x
    tr = glue_trace(QX.one, (x, x - 1), [a, b])
    assert (tr.d, tr.n, tr.big_d) == (1, 0, 1)
    assert tr.bezout == (QX.one, QX(-1))
    assert simplify(tr.result).num == x**2 + 1


@pytest.mark.parametrize(
    "ring,parts",
    [(Z, (2, 3)), (Z, (6, 10, 15)), (Z, (1,)), (Z12, (2, 3)), (QX, ("x", "x - 1")), (QX, ("x^2", "1 - x^3"))],
    ids=str,
)
def test_constant_family_glues_to_itself(ring, parts):
    parts = tuple(ring(p) for p in parts)
    rng = random.Random(1)
    base = LocRing(ring.one)
    for _ in range(30):
        r = random_elem(ring, rng)
        s = glue(ring.one, parts, spread(base.from_base(r), parts))
        assert loc_eq(s, base.from_base(r))


def test_identity_cover_returns_input():
    base = LocRing(Z(1))
    for r in (-3, 0, 11):
        assert loc_eq(glue(Z(1), [Z(1)], [base.from_base(r)]), base.from_base(r))


CASES = [
    (Z, 1, (2, 3)),
    (Z, 1, (6, 10, 15)),
    (Z, 6, (12, 18)),
    (Z, 30, (60, 90, 150)),
    (Z12, 1, (2, 3)),
    (Z12, 2, (2, 10)),
    (QX, 1, (x, x - 1)),
    (QX, x, (x**2, x**2 - x, x**3 + x)),
]


@pytest.mark.parametrize("ring,h,parts", CASES, ids=str)
def test_spread_after_glue_is_identity(ring, h, parts):
    h, parts = ring(h), ring.elems(*parts)
    rng = random.Random(str(parts) + str(h))
    for _ in range(25):
        s, fam = compatible_family(h, parts, rng)
        tr = glue_trace(h, parts, fam)
        assert loc_eq(tr.result, s)
        for f, a, back in zip(parts, fam, spread(tr.result, parts)):
            assert loc_eq(back, a)
        # separation identity from the trace
        for j, f in enumerate(parts):
            assert tr.result.num * f**tr.big_d == tr.scaled[j] * h**tr.t
        order = tuple(reversed(range(len(parts))))
        assert loc_eq(glue(h, parts, fam, order=order), tr.result)


def test_glue_tier2():
    X, Y = QXY.gens()
    parts = (X, Y, 1 - X - Y)
    rng = random.Random(2)
    for _ in range(5):
        s, fam = compatible_family(QXY.one, parts, rng)
        assert loc_eq(glue(QXY.one, parts, fam), s)


def test_glue_preconditions():
    A, B = LocRing(Z(2)), LocRing(Z(3))
    with pytest.raises(PreconditionError, match="do not cover"):
        glue(Z(6), Z.elems(2, 3), [A.one, B.one])
    with pytest.raises(PreconditionError, match="incompatible"):
        glue(Z(1), Z.elems(2, 3), [A(1, 1), B(1, 1)])
    with pytest.raises(PreconditionError, match="permutation"):
        glue(Z(1), Z.elems(2, 3), [A(14, 1), B(21, 1)], order=(0, 0))


def test_empty_cover_glue():
    for ring in (Z, Z12, QX):
        s = glue(ring.zero, (), ())
        assert s.loc.is_zero_ring
        assert loc_eq(s, s.loc.one)


def test_restrict_basic_examples():
    s = restrict_basic(LocRing(Z(2))(1, 1), 6)
    assert (s.num, s.exp) == (Z(3), 1)
    a = LocRing(x)(x + 2, 3)
    assert loc_eq(restrict_basic(a, x), a)
    assert restrict_basic(a, x**2) is not None
    with pytest.raises(PreconditionError, match="not below"):
        restrict_basic(a, x + 1)


def test_restrict_section_examples():
    sec = make_section(top(Z), Z.elems(2, 3), [LocRing(Z(2))(14, 1), LocRing(Z(3))(21, 1)])
    same = restrict_section(sec, top(Z), Z.elems(2, 3))
    for a, b in zip(same.family.sections, sec.family.sections):
        assert loc_eq(a, b)
    r = restrict_section(sec, d_of(Z(6)), [Z(6)])
    (comp,) = r.family.sections
    assert loc_eq(comp, LocRing(Z(6)).from_base(7))

    g = global_section(x**2 + 1, (x, x - 1))
    r = restrict_section(g, d_of(x * (x - 1)), [x**2 - x])
    (comp,) = r.family.sections
    assert loc_eq(comp, LocRing(x**2 - x).from_base(x**2 + 1))


def test_restrict_section_functoriality():
    rng = random.Random(6)
    for _ in range(15):
        r = random_elem(Z, rng)
        sec = global_section(r, Z.elems(6, 10, 15))
        y = LatticeElt(Z, (4, 6))
        z = LatticeElt(Z, (12,))
        via = restrict_section(restrict_section(sec, y, [Z(2)]), z, [Z(12)])
        direct = restrict_section(sec, z, [Z(12)])
        assert section_eq(via, direct)


def test_restrict_section_preconditions():
    sec = global_section(Z(4), [Z(1)])
    small = make_section(d_of(Z(2)), [Z(2)], [LocRing(Z(2)).one])
    with pytest.raises(PreconditionError):
        restrict_section(small, top(Z), [Z(1)])
    with pytest.raises(PreconditionError):
        restrict_section(sec, d_of(Z(6)), [Z(2), Z(3)])


def test_section_eq_examples():
    s = make_section(top(Z), Z.elems(2, 3), [LocRing(Z(2))(14, 1), LocRing(Z(3))(21, 1)])
    assert section_eq(s, s)
    t = make_section(top(Z), [Z(1)], [LocRing(Z(1))(7)])
    assert section_eq(s, t)
    assert not section_eq(s, global_section(Z(8), Z.elems(2, 3)))
    with pytest.raises(PreconditionError):
        section_eq(s, make_section(d_of(Z(2)), [Z(2)], [LocRing(Z(2)).one]))


def test_separation_by_construction():
    rng = random.Random(8)
    parts = (x, x - 1)
    for _ in range(20):
        s, fam = compatible_family(QX.one, parts, rng)
        s2 = perturb(s, rng)
        a = make_section(top(QX), parts, spread(s, parts))
        b = make_section(top(QX), parts, spread(s2, parts))
        assert section_eq(a, b)


def test_top_roundtrip_examples():
    assert top_roundtrip(Z, [2, 3], [7]).ok
    assert top_roundtrip(Z, [1], [Z(-4), Z(9)]).ok
    rng = random.Random(9)
    polys = []
    for _ in range(200):
        p = QX.zero
        for i in range(rng.randint(0, 5) + 1):
            p = p + rng.randint(-5, 5) * x**i
        polys.append(p)
    rep = top_roundtrip(QX, [x, x - 1], polys)
    assert rep.ok, rep
    with pytest.raises(PreconditionError):
        top_roundtrip(Z, [2, 4], [1])


def test_global_sections_match_base_ring():
    # sections over top on different covers compare like the ring elements
    rng = random.Random(10)
    for _ in range(30):
        a, b = random_elem(Z, rng), random_elem(Z, rng)
        s = global_section(a, Z.elems(2, 3))
        t = global_section(b, Z.elems(6, 10, 15))
        assert section_eq(s, t) == (a == b)


def test_zero_cover_section():
    sec = make_section(bottom(Z), [], [])
    assert sec.family.sections == ()
    assert check_compatible(cover_check(bottom(Z), []), []) is not None
    assert random_loc_elem(LocRing(Z(0)), random.Random(0)).loc.is_zero_ring
