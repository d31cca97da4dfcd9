"""The Zariski lattice of a ring as finite generator lists.

A :class:`LatticeElt` ``[a0, ..., an]`` stands for the radical of the ideal
the ``ai`` generate. Join concatenates, meet takes pairwise products, and
order and equality are decided by radical membership of every generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .certs import RadicalCert
from .errors import PreconditionError, UsageError
from .report import Report
from .rings import Ring, is_unit, radical_membership, ring_gcd


@dataclass(frozen=True)
class LatticeElt:
    """A generator list. ``==`` compares lists; :func:`lat_eq` compares radicals."""

    ring: Ring
    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.ring(g) for g in self.gens))

    def __or__(self, other):
        return lat_join(self, other)

    def __and__(self, other):
        return lat_meet(self, other)

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.gens) + "]"


class _Unknown:
    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


def bottom(ring):
    return LatticeElt(ring, ())


def top(ring):
    return LatticeElt(ring, (ring.one,))


def d_of(f):
    return LatticeElt(f.ring, (f,))


def _same(a, b):
    if a.ring != b.ring:
        raise UsageError(f"lattice elements over {a.ring} and {b.ring}")


def lat_join(a, b):
    _same(a, b)
    return LatticeElt(a.ring, a.gens + b.gens)


def lat_meet(a, b):
    _same(a, b)
    return LatticeElt(a.ring, tuple(x * y for x in a.gens for y in b.gens))


def leq_certificates(a, b):
    """One :class:`RadicalCert` per generator of ``a`` into ``sqrt<b>``, or ``None``."""
    _same(a, b)
    certs = []
    for g in a.gens:
        c = radical_membership(g, b.gens)
        if c is None:
            return None
        certs.append(c)
    return tuple(certs)


def lat_leq(a, b):
    return leq_certificates(a, b) is not None


def eq_certificates(a, b):
    """``(down, up)`` certificate tuples witnessing ``a <= b`` and ``b <= a``."""
    down = leq_certificates(a, b)
    if down is None:
        return None
    up = leq_certificates(b, a)
    if up is None:
        return None
    return down, up


def lat_eq(a, b):
    return eq_certificates(a, b) is not None


def first_failure(a, b):
    """The first generator of ``a`` outside ``sqrt<b>``, or ``None``."""
    for g in a.gens:
        if radical_membership(g, b.gens) is None:
            return g
    return None


def _monic(g):
    if g.ring.tier == 2:
        lead = g.v[0][1]
        return g * (1 / lead)
    return g


def normalize(a):
    """A shorter generator list for the same lattice element."""
    ring = a.ring
    gens = []
    for g in a.gens:
        if g.is_zero():
            continue
        g = _monic(g)
        if g not in gens:
            gens.append(g)
    if any(is_unit(g) is not None for g in gens):
        return top(ring)
    if not gens:
        return bottom(ring)
    if ring.tier == 1:
        return LatticeElt(ring, (ring_gcd(gens, ring),))
    # later generators go first so the earlier (usually simpler) ones survive
    for i in reversed(range(len(gens))):
        others = gens[:i] + gens[i + 1:]
        if others and radical_membership(gens[i], others) is not None:
            gens = others
    return LatticeElt(ring, tuple(gens))


def is_basic_open(a):
    """``f`` with ``D(f) = a``; ``UNKNOWN`` when undecided (multivariate only)."""
    n = normalize(a)
    if not n.gens:
        return a.ring.zero
    if len(n.gens) == 1:
        return n.gens[0]
    return UNKNOWN


def support_check(ring, pairs):
    """Check the support relations for ``D`` on the sampled pairs."""
    rep = Report(f"support axioms over {ring}")
    rep.add("(1) D(1) = top", lat_eq(d_of(ring.one), top(ring)))
    rep.add("(1) D(0) = bottom", lat_eq(d_of(ring.zero), bottom(ring)))
    for f, g in pairs:
        f, g = ring(f), ring(g)
        tag = f"({f}, {g})"
        rep.add(f"(2) D(fg) = D(f) meet D(g) {tag}", lat_eq(d_of(f * g), d_of(f) & d_of(g)))
        cert = RadicalCert(f + g, (f, g), 1, (ring.one, ring.one))
        rep.add(
            f"(3) D(f+g) <= D(f) join D(g) {tag}",
            cert.verify() and lat_leq(d_of(f + g), d_of(f) | d_of(g)),
        )
    return rep


# -------------------------------------------------- finite target lattices


class FiniteDistLattice:
    """A finite distributive lattice given by its order, tabulated and checked."""

    def __init__(self, elements, leq):
        self.elements = tuple(elements)
        els = self.elements
        self._leq = {(a, b): bool(leq(a, b)) for a in els for b in els}
        self._join, self._meet = {}, {}
        for a, b in product(els, els):
            self._join[a, b] = self._extremum(a, b, upper=True)
            self._meet[a, b] = self._extremum(a, b, upper=False)
        self.top = self._bound(upper=True)
        self.bottom = self._bound(upper=False)
        for a, b, c in product(els, els, els):
            if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)):
                raise UsageError(f"not distributive at {a}, {b}, {c}")

    def _extremum(self, a, b, upper):
        le = self._leq
        if upper:
            cands = [c for c in self.elements if le[a, c] and le[b, c]]
            best = [c for c in cands if all(le[c, d] for d in cands)]
        else:
            cands = [c for c in self.elements if le[c, a] and le[c, b]]
            best = [c for c in cands if all(le[d, c] for d in cands)]
        if len(best) != 1:
            raise UsageError(f"no unique {'join' if upper else 'meet'} for {a}, {b}")
        return best[0]

    def _bound(self, upper):
        for c in self.elements:
            if all(self._leq[(d, c) if upper else (c, d)] for d in self.elements):
                return c
        raise UsageError("lattice has no top or bottom")

    def leq(self, a, b):
        return self._leq[a, b]

    def join(self, a, b):
        return self._join[a, b]

    def meet(self, a, b):
        return self._meet[a, b]

    @classmethod
    def divisors(cls, n):
        return cls([d for d in range(1, n + 1) if n % d == 0], lambda a, b: b % a == 0)

    @classmethod
    def subsets(cls, points):
        points = tuple(points)
        subs = [frozenset(p for i, p in enumerate(points) if mask >> i & 1) for mask in range(1 << len(points))]
        return cls(subs, lambda a, b: a <= b)


def check_support_map(d, target, elems):
    """Report on the support relations for ``d`` over all pairs from ``elems``."""
    rep = Report("support map")
    if not elems:
        return rep
    ring = elems[0].ring
    rep.add("d(1) = top", d(ring.one) == target.top)
    rep.add("d(0) = bottom", d(ring.zero) == target.bottom)
    for f, g in product(elems, elems):
        rep.add(f"d(fg) = d(f) meet d(g) at ({f}, {g})", d(f * g) == target.meet(d(f), d(g)))
        rep.add(
            f"d(f+g) <= d(f) join d(g) at ({f}, {g})",
            target.leq(d(f + g), target.join(d(f), d(g))),
        )
    return rep


def universal_morphism(d, a, target):
    """Image of ``a`` under the lattice map induced by the support ``d``."""
    rep = check_support_map(d, target, list(a.gens))
    if not rep.ok:
        raise PreconditionError(f"d is not a support map: {rep.failures()[0].name}")
    out = target.bottom
    for g in a.gens:
        out = target.join(out, d(g))
    return out


def divisor_support(n):
    """Support of Z or Z/m (with ``n | m``) into the divisors of a squarefree ``n``.

    ``f`` goes to the product of the primes of ``n`` not dividing it.
    """
    target = FiniteDistLattice.divisors(n)
    return target, lambda f: n // gcd(f.v, n)


def point_support(points, nonvanishing):
    """Support into subsets of ``points``: where ``f`` does not vanish."""
    points = tuple(points)
    target = FiniteDistLattice.subsets(points)
    return target, lambda f: frozenset(p for p in points if nonvanishing(f, p))


def evaluate(f, point):
    """Value of a univariate polynomial at a rational point."""
    acc = 0
    for c in reversed(f.v):
        acc = acc * point + c
    return acc
