"""The structure sheaf: ``D(f) |-> R[1/f]``, gluing, and sections over any lattice element.

Sections over a general lattice element are presented as a cover by basic
opens together with a compatible family on it. Two presentations are
compared on the common refinement by pairwise products.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvariantError, PreconditionError
from .lattice import LatticeElt, d_of, lat_eq, lat_leq, top
from .localization import LocElem, LocHom, LocRing, loc_eq, product_restriction, restriction_hom
from .report import Report
from .rings import ann_power, radical_membership
from .sheaf import CompatibleFamily, Cover, check_compatible, cover_check, cover_failure, disagreement


@dataclass(frozen=True)
class GlueTrace:
    """Intermediate values of one gluing run; ``result`` lives in ``R[1/h]``."""

    h: object
    parts: tuple
    d: int
    n: int  # max pairwise annihilating exponent
    big_d: int
    scaled: tuple  # a_i * f_i**n
    bezout: tuple  # h**t == sum(bezout[i] * f_i**big_d)
    t: int
    result: LocElem


def _require_cover(h, parts):
    cover = cover_check(d_of(h), parts)
    if cover is None:
        raise PreconditionError(f"parts do not cover D({h}): {cover_failure(d_of(h), parts)}")
    return cover


def glue_trace(h, parts, sections, order=None):
    """Glue a compatible family over a cover of ``D(h)`` into ``R[1/h]``.

    ``order`` permutes the generators before the Bezout combination is
    computed, which yields different coefficients but (by uniqueness) the
    same section.
    """
    ring = h.ring
    parts = tuple(ring(p) for p in parts)
    cover = _require_cover(h, parts)
    sections = tuple(sections)
    bad = disagreement(cover, sections)
    if bad is not None:
        raise PreconditionError(f"family incompatible at parts {bad}")
    A = LocRing(h)
    n = len(parts)
    if n == 0:
        # D(h) is bottom, so R[1/h] is the zero ring
        return GlueTrace(h, parts, 0, 0, 0, (), (), 0, A.zero)

    d = max(s.exp for s in sections)
    a = [s.num * f ** (d - s.exp) for s, f in zip(sections, parts)]
    big_n = 0
    for i, j in ((i, j) for i in range(n) for j in range(i + 1, n)):
        fi, fj = parts[i], parts[j]
        w = ann_power(fi * fj, a[i] * fj**d - a[j] * fi**d)
        if w is None:
            raise InvariantError(f"no annihilating power for compatible pair {(i, j)}")
        big_n = max(big_n, w.k)
    scaled = [ai * f**big_n for ai, f in zip(a, parts)]
    big_d = d + big_n
    powered = [f**big_d for f in parts]
    for i, j in ((i, j) for i in range(n) for j in range(i + 1, n)):
        if scaled[i] * powered[j] != scaled[j] * powered[i]:
            raise InvariantError(f"cross identity fails for {(i, j)}")

    idx = tuple(order) if order is not None else tuple(range(n))
    if sorted(idx) != list(range(n)):
        raise PreconditionError(f"order {order} is not a permutation of the parts")
    cert = radical_membership(h, [powered[i] for i in idx])
    if cert is None:
        raise InvariantError(f"{h} not in sqrt of powered cover")
    e = [None] * n
    for pos, i in enumerate(idx):
        e[i] = cert.coeffs[pos]
    t = cert.k
    num = ring.zero
    for ei, si in zip(e, scaled):
        num = num + ei * si
    result = LocElem(A, num, t)

    ht = h**t
    for j in range(n):
        if num * powered[j] != scaled[j] * ht:
            raise InvariantError(f"separation identity fails at part {j}")
        down = cover.cert_down[j]
        back = LocHom(A, LocRing(parts[j]), down.k, down.coeffs[0])(result)
        if not loc_eq(back, sections[j]):
            raise InvariantError(f"glued section does not restrict to section {j}")
    return GlueTrace(h, parts, d, big_n, big_d, tuple(scaled), tuple(e), t, result)


def glue(h, parts, sections, order=None):
    return glue_trace(h, parts, sections, order).result


def restrict_basic(s, g):
    """Restrict ``s`` in ``R[1/f]`` to ``R[1/g]`` when ``D(g) <= D(f)``."""
    g = s.loc.ring(g)
    hom = restriction_hom(s.loc.den, g)
    if hom is None:
        raise PreconditionError(f"D({g}) is not below D({s.loc.den}): {g} not in sqrt<{s.loc.den}>")
    return hom(s)


def spread(s, parts):
    """Restrictions of ``s`` to every ``R[1/f]`` for ``f`` in ``parts``."""
    return tuple(restrict_basic(s, f) for f in parts)


@dataclass(frozen=True)
class SheafSection:
    over: LatticeElt
    cover: Cover
    family: CompatibleFamily

    def verify(self):
        return self.family.cover == self.cover and self.family.verify()


def make_section(over, parts, sections):
    cover = cover_check(over, parts)
    if cover is None:
        raise PreconditionError(f"parts do not cover {over}: {cover_failure(over, parts)}")
    fam = check_compatible(cover, sections)
    if fam is None:
        raise PreconditionError(f"family incompatible at parts {disagreement(cover, sections)}")
    return SheafSection(over, cover, fam)


def global_section(r, parts):
    """The section over top given by ``r`` in ``R``, presented on ``parts``."""
    ring = r.ring
    return make_section(top(ring), parts, spread(LocRing(ring.one).from_base(r), parts))


def restrict_section(sec, y, gparts):
    """Restrict a section over ``x`` to ``y <= x`` presented on the cover ``gparts``."""
    if not lat_leq(y, sec.over):
        raise PreconditionError(f"{y} is not below {sec.over}")
    ycover = cover_check(y, gparts)
    if ycover is None:
        raise PreconditionError(f"parts do not cover {y}: {cover_failure(y, gparts)}")
    comps = []
    for gj in ycover.parts:
        subparts = [f * gj for f in sec.cover.parts]
        subsecs = [product_restriction(f, gj)(s) for f, s in zip(sec.cover.parts, sec.family.sections)]
        comps.append(glue(gj, subparts, subsecs))
    fam = check_compatible(ycover, comps)
    if fam is None:
        raise InvariantError("restricted components are not compatible")
    return SheafSection(y, ycover, fam)


def section_eq(s, t):
    """Compare two presentations on the refinement ``{f_i * g_j}``."""
    if not lat_eq(s.over, t.over):
        raise PreconditionError(f"sections over different elements {s.over} and {t.over}")
    for (f, a), (g, b) in product(
        zip(s.cover.parts, s.family.sections), zip(t.cover.parts, t.family.sections)
    ):
        if not loc_eq(product_restriction(f, g)(a), product_restriction(g, f)(b)):
            return False
    return True


def top_roundtrip(ring, parts, samples):
    """Evidence for the bijection between ``R`` and sections over top."""
    parts = tuple(ring(p) for p in parts)
    if cover_check(top(ring), parts) is None:
        raise PreconditionError(f"parts do not cover top: {cover_failure(top(ring), parts)}")
    base = LocRing(ring.one)
    rep = Report(f"global sections over {ring} on cover {[str(p) for p in parts]}")
    for i, r in enumerate(samples):
        r = ring(r)
        family = spread(base.from_base(r), parts)
        fam = check_compatible(cover_check(top(ring), parts), family)
        rep.add(f"#{i} constant family compatible", fam is not None, str(r))
        if fam is None:
            continue
        s = glue(ring.one, parts, family)
        rep.add(f"#{i} glue = r", loc_eq(s, base.from_base(r)), f"{r} -> {s}")
        back = spread(s, parts)
        rep.add(f"#{i} spread(glue) = family", all(loc_eq(x, y) for x, y in zip(back, family)))
    return rep
