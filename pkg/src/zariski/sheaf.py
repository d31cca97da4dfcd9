"""Sheaf-condition machinery over finite covers by basic opens.

A cover of a lattice element by ``D(f1), ..., D(fn)`` is indexed by the
shape category with one object per index and one per pair ``i < j``. A family
of local sections is compatible when, for every pair, the two restrictions
to ``R[1/(fi*fj)]`` agree; the agreement witnesses are kept.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError, UsageError
from .lattice import LatticeElt, d_of, lat_join, leq_certificates
from .localization import LocElem, LocRing, loc_eq, loc_eq_witness, product_restriction, simplify
from .report import Report


@dataclass(frozen=True)
class Arrow:
    kind: str  # "id", "left" or "right"
    dom: tuple
    cod: tuple


@dataclass(frozen=True)
class DiagShape:
    n: int
    objects: tuple
    arrows: tuple

    def hom(self, a, b):
        return [f for f in self.arrows if f.dom == a and f.cod == b]

    def compose(self, g, f):
        """``g o f``; ``None`` when the arrows are not composable."""
        if f.cod != g.dom:
            return None
        if f.kind == "id":
            return g
        if g.kind == "id":
            return f
        raise AssertionError(f"unexpected composable pair {f}, {g}")


def shape_category(n):
    """Singletons ``("sing", i)``, pairs ``("pair", i, j)`` and their inclusions."""
    if n < 0:
        raise UsageError("cover size must be >= 0")
    sings = [("sing", i) for i in range(n)]
    pairs = [("pair", i, j) for i, j in combinations(range(n), 2)]
    arrows = [Arrow("id", o, o) for o in sings + pairs]
    for _, i, j in pairs:
        arrows.append(Arrow("left", ("sing", i), ("pair", i, j)))
        arrows.append(Arrow("right", ("sing", j), ("pair", i, j)))
    return DiagShape(n, tuple(sings + pairs), tuple(arrows))


@dataclass(frozen=True)
class Cover:
    """``target = D(parts[0]) v ... v D(parts[-1])`` with certificates both ways."""

    target: LatticeElt
    parts: tuple
    cert_down: tuple  # parts[i] in sqrt<target.gens>
    cert_up: tuple  # target.gens[j] in sqrt<parts>

    def verify(self):
        return all(c.verify() for c in self.cert_down + self.cert_up)


def cover_check(target, parts):
    parts = tuple(target.ring(p) for p in parts)
    joined = LatticeElt(target.ring, parts)
    down = leq_certificates(joined, target)
    if down is None:
        return None
    up = leq_certificates(target, joined)
    if up is None:
        return None
    return Cover(target, parts, down, up)


def cover_failure(target, parts):
    """Human-readable reason why ``parts`` do not cover ``target``."""
    from .lattice import first_failure

    joined = LatticeElt(target.ring, tuple(target.ring(p) for p in parts))
    g = first_failure(joined, target)
    if g is not None:
        return f"{g} not in sqrt<{', '.join(map(str, target.gens))}>"
    g = first_failure(target, joined)
    if g is not None:
        return f"{g} not in sqrt<{', '.join(map(str, joined.gens))}>"
    return None


@dataclass(frozen=True)
class CompatibleFamily:
    cover: Cover
    sections: tuple
    agreements: tuple  # ((i, j), AnnPowerWitness) for i < j

    def verify(self):
        return self.cover.verify() and all(w.verify() for _, w in self.agreements)


def pair_restrictions(cover, sections, i, j):
    """Sections ``i`` and ``j`` moved into ``R[1/(fi*fj)]``."""
    f, g = cover.parts[i], cover.parts[j]
    return product_restriction(f, g)(sections[i]), product_restriction(g, f)(sections[j])


def _check_sections(cover, sections):
    sections = tuple(sections)
    if len(sections) != len(cover.parts):
        raise UsageError(f"{len(sections)} sections for {len(cover.parts)} cover parts")
    for s, f in zip(sections, cover.parts):
        if not isinstance(s, LocElem) or s.loc != LocRing(f):
            raise UsageError(f"section {s} does not live in R[1/({f})]")
    return sections


def disagreement(cover, sections):
    """First pair ``(i, j)`` whose restrictions differ, or ``None``."""
    sections = _check_sections(cover, sections)
    for i, j in combinations(range(len(sections)), 2):
        a, b = pair_restrictions(cover, sections, i, j)
        if not loc_eq(a, b):
            return i, j
    return None


def check_compatible(cover, sections):
    sections = _check_sections(cover, sections)
    agreements = []
    for i, j in combinations(range(len(sections)), 2):
        a, b = pair_restrictions(cover, sections, i, j)
        w = loc_eq_witness(a, b)
        if w is None:
            return None
        agreements.append(((i, j), w))
    return CompatibleFamily(cover, sections, tuple(agreements))


def join_of_basic(ring, parts):
    out = LatticeElt(ring, ())
    for p in parts:
        out = lat_join(out, d_of(ring(p)))
    return out


def pullback_instance_check(f, g, h, test_pairs):
    """Check that ``R[1/h]`` is the pullback of ``R[1/f] -> R[1/fg] <- R[1/g]``.

    ``test_pairs`` holds ``(a, b)`` or ``(a, b, expected_compatible)``.
    Compatible pairs must glue, restrict back, and glue to the same element
    when the Bezout combination is computed in the reversed order.
    """
    from .structure import glue_trace, spread

    cover = cover_check(d_of(h), [f, g])
    if cover is None:
        raise PreconditionError(f"D({h}) != D({f}) v D({g})")
    rep = Report(f"pullback square for h={h}, f={f}, g={g}")
    for idx, pair in enumerate(test_pairs):
        a, b = pair[0], pair[1]
        expected = pair[2] if len(pair) > 2 else None
        fam = check_compatible(cover, (a, b))
        if expected is not None:
            rep.add(f"#{idx} compatibility as expected", (fam is not None) == expected)
        if fam is None:
            rep.add(f"#{idx} incompatible pair rejected", True, f"({a}, {b})")
            continue
        first = glue_trace(h, cover.parts, fam.sections)
        again = glue_trace(h, cover.parts, fam.sections, order=(1, 0))
        back = spread(first.result, cover.parts)
        rep.add(f"#{idx} glue restricts back", loc_eq(back[0], a) and loc_eq(back[1], b))
        rep.add(f"#{idx} glue unique", loc_eq(first.result, again.result), str(simplify(first.result)))
    # F(bottom) is terminal: R[1/0] has exactly one element
    dead = LocRing(h.ring.zero)
    for idx, pair in enumerate(test_pairs):
        a, b = pair[0], pair[1]
        rep.add(f"#{idx} R[1/0] collapses", loc_eq(dead(a.num, a.exp), dead(b.num, b.exp)))
    rep.add("R[1/0]: 0 = 1", loc_eq(dead.zero, dead.one))
    return rep
