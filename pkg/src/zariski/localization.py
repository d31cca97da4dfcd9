"""Localizations ``R[1/f]`` and the homomorphisms between them.

Fractions carry no canonical form: :class:`LocElem` is a pair ``(num, exp)``
denoting ``num / f**exp`` and two fractions are equal when a power of ``f``
kills their cross difference. ``loc_eq`` decides this and hands back the
:class:`~zariski.certs.AnnPowerWitness`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .certs import RadicalCert
from .errors import InvariantError, PreconditionError, UsageError
from .report import Report
from .rings import RingElem, ann_power, is_unit, radical_membership


@dataclass(frozen=True)
class LocRing:
    """``R[1/den]``. ``den = 1`` gives a copy of ``R`` itself."""

    den: RingElem

    @property
    def ring(self):
        return self.den.ring

    @cached_property
    def is_zero_ring(self):
        return ann_power(self.den, self.ring.one) is not None

    def __call__(self, num, exp=0):
        return LocElem(self, self.ring(num), exp)

    def from_base(self, r):
        return LocElem(self, self.ring(r), 0)

    @property
    def zero(self):
        return self.from_base(self.ring.zero)

    @property
    def one(self):
        return self.from_base(self.ring.one)

    def __str__(self):
        return f"{self.ring}[1/({self.den})]"


@dataclass(frozen=True)
class LocElem:
    """``num / loc.den**exp``. ``==`` compares representations; use :func:`loc_eq`."""

    loc: LocRing
    num: RingElem
    exp: int = 0

    def __post_init__(self):
        if not isinstance(self.exp, int) or self.exp < 0:
            raise UsageError(f"exponent must be >= 0, got {self.exp!r}")
        if self.num.ring != self.loc.ring:
            raise UsageError(f"numerator {self.num!r} is not in {self.loc.ring}")

    def _check(self, other):
        if not isinstance(other, LocElem) or other.loc != self.loc:
            raise UsageError(f"{other!r} is not an element of {self.loc}")
        return other

    def __add__(self, other):
        other = self._check(other)
        f = self.loc.den
        a, b = (self, other) if self.exp >= other.exp else (other, self)
        return LocElem(self.loc, a.num + b.num * f ** (a.exp - b.exp), a.exp)

    def __neg__(self):
        return LocElem(self.loc, -self.num, self.exp)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return LocElem(self.loc, self.num * other.num, self.exp + other.exp)

    def __pow__(self, k):
        return LocElem(self.loc, self.num**k, self.exp * k)

    def equals(self, other):
        return loc_eq(self, other)

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        den = f"({self.loc.den})" if self.exp == 1 else f"({self.loc.den})^{self.exp}"
        return f"({self.num})/{den}"


def loc_eq_witness(a, b):
    """Witness ``k`` with ``f**k * (f**m * r - f**n * r') == 0``, or ``None``."""
    a._check(b)
    f = a.loc.den
    diff = f**b.exp * a.num - f**a.exp * b.num
    return ann_power(f, diff)


def loc_eq(a, b):
    return loc_eq_witness(a, b) is not None


def loc_arith(op, *args):
    """Dispatcher over the fraction operations: add, mul, neg, from_base."""
    if op == "add":
        return args[0] + args[1]
    if op == "mul":
        return args[0] * args[1]
    if op == "neg":
        return -args[0]
    if op == "from_base":
        loc, r = args
        return loc.from_base(r)
    raise UsageError(f"unknown localization operation {op!r}")


def loc_is_unit(a):
    """Inverse of ``r/f**n`` built from ``f**k = c*r``, or ``None``."""
    f = a.loc.den
    cert = radical_membership(f, [a.num])
    if cert is None:
        return None
    inv = LocElem(a.loc, cert.coeffs[0] * f**a.exp, cert.k)
    if not loc_eq(a * inv, a.loc.one):
        raise InvariantError(f"inverse of {a} failed to verify")
    return inv


def simplify(a):
    """Clear a unit denominator; purely cosmetic, the value is unchanged."""
    inv = is_unit(a.loc.den)
    if inv is None or a.exp == 0:
        return a
    return LocElem(a.loc, a.num * inv**a.exp, 0)


@dataclass(frozen=True)
class LocHom:
    """The R-algebra map ``R[1/f] -> R[1/g]`` induced by ``g**k == c*f``.

    ``r/f**n`` goes to ``r*c**n / g**(k*n)``.
    """

    source: LocRing
    target: LocRing
    k: int
    c: RingElem
    cert: RadicalCert | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.k < 1 or self.target.den**self.k != self.c * self.source.den:
            raise PreconditionError(
                f"({self.target.den})^{self.k} != ({self.c})*({self.source.den})"
            )

    def __call__(self, a):
        if a.loc != self.source:
            raise UsageError(f"{a} is not in {self.source}")
        return LocElem(self.target, a.num * self.c**a.exp, self.k * a.exp)

    def then(self, other):
        """Composite ``other o self`` with the multiplied certificate."""
        # e^l = d*g and g^k = c*f give e^(l*k) = d^k * c * f
        return LocHom(self.source, other.target, other.k * self.k, other.c**self.k * self.c)


def apply_hom(h, a):
    return h(a)


def restriction_hom(f, g):
    """The unique R-algebra map ``R[1/f] -> R[1/g]`` when ``D(g) <= D(f)``."""
    cert = radical_membership(g, [f])
    if cert is None:
        return None
    return LocHom(LocRing(f), LocRing(g), cert.k, cert.coeffs[0], cert)


def product_restriction(f, other):
    """``R[1/f] -> R[1/(f*other)]`` from the certificate ``(f*other)**1 == other*f``."""
    return LocHom(LocRing(f), LocRing(f * other), 1, other)


# ----------------------------------------------------- iterated localization


@dataclass(frozen=True)
class Loc2Ring:
    """``R[1/f][1/g]``, with ``g`` meaning ``g/1``."""

    f: RingElem
    g: RingElem

    @property
    def ring(self):
        return self.f.ring

    def __call__(self, num, inner=0, outer=0):
        return Loc2Elem(self, self.ring(num), inner, outer)

    @property
    def one(self):
        return self(self.ring.one)

    @property
    def zero(self):
        return self(self.ring.zero)

    def __str__(self):
        return f"{self.ring}[1/({self.f})][1/({self.g})]"


@dataclass(frozen=True)
class Loc2Elem:
    """``(num / f**inner) / g**outer``."""

    loc: Loc2Ring
    num: RingElem
    inner: int = 0
    outer: int = 0

    def _check(self, other):
        if not isinstance(other, Loc2Elem) or other.loc != self.loc:
            raise UsageError(f"{other!r} is not an element of {self.loc}")
        return other

    def __add__(self, other):
        other = self._check(other)
        f, g = self.loc.f, self.loc.g
        num = self.num * f**other.inner * g**other.outer + other.num * f**self.inner * g**self.outer
        return Loc2Elem(self.loc, num, self.inner + other.inner, self.outer + other.outer)

    def __mul__(self, other):
        other = self._check(other)
        return Loc2Elem(self.loc, self.num * other.num, self.inner + other.inner, self.outer + other.outer)

    def __neg__(self):
        return Loc2Elem(self.loc, -self.num, self.inner, self.outer)

    def equals(self, other):
        return loc2_eq(self, other)

    def __str__(self):
        return f"(({self.num})/({self.loc.f})^{self.inner})/({self.loc.g})^{self.outer}"


def loc2_eq(a, b):
    """Iterated fraction equality.

    Equality in ``R[1/f]`` of ``g**(k+m') r / f**n`` and ``g**(k+m) r' / f**n'``
    for some ``k`` collapses to ``f*g`` annihilating
    ``g**m' f**n' r - g**m f**n r'``.
    """
    a._check(b)
    f, g = a.loc.f, a.loc.g
    diff = g**b.outer * f**b.inner * a.num - g**a.outer * f**a.inner * b.num
    return ann_power(f * g, diff) is not None


# ----------------------------------------------------------- isomorphisms


def _eq(a, b):
    return a.equals(b)


@dataclass(frozen=True)
class Iso:
    """A pair of mutually inverse ring maps, checkable on samples."""

    name: str
    source: object
    target: object
    forward: Callable
    backward: Callable

    def check(self, source_samples, target_samples):
        rep = Report(f"iso {self.name}")
        for side, samples, there, back, dom, cod in (
            ("src", source_samples, self.forward, self.backward, self.source, self.target),
            ("tgt", target_samples, self.backward, self.forward, self.target, self.source),
        ):
            rep.add(f"{side}: preserves 1", _eq(there(dom.one), cod.one))
            for i, a in enumerate(samples):
                rep.add(f"{side}: roundtrip #{i}", _eq(back(there(a)), a), str(a))
                b = samples[(i + 1) % len(samples)]
                rep.add(f"{side}: preserves + #{i}", _eq(there(a + b), there(a) + there(b)))
                rep.add(f"{side}: preserves * #{i}", _eq(there(a * b), there(a) * there(b)))
        return rep


def iso_iterated(f, g):
    """``R[1/f][1/g] ~= R[1/(f*g)]``."""
    src, tgt = Loc2Ring(f, g), LocRing(f * g)

    def forward(a):
        return LocElem(tgt, a.num * f**a.outer * g**a.inner, a.inner + a.outer)

    def backward(b):
        return Loc2Elem(src, b.num, b.exp, b.exp)

    return Iso("iterated", src, tgt, forward, backward)


def iso_unit(f):
    """``R[1/f] ~= R`` for a unit ``f``; ``R`` is modelled as ``R[1/1]``."""
    inv = is_unit(f)
    if inv is None:
        raise PreconditionError(f"missing certificate: {f} is not a unit")
    src, tgt = LocRing(f), LocRing(f.ring.one)

    def forward(a):
        return tgt.from_base(a.num * inv**a.exp)

    def backward(b):
        return src.from_base(b.num)  # b.exp is a power of 1

    return Iso("unit", src, tgt, forward, backward)


def iso_mutual(f, g, forward_cert=None, backward_cert=None):
    """``R[1/f] ~= R[1/g]`` when ``D(f) = D(g)``.

    ``forward_cert`` certifies ``g in sqrt<f>``, ``backward_cert`` ``f in sqrt<g>``;
    both are computed when not supplied.
    """
    fwd = forward_cert or radical_membership(g, [f])
    if fwd is None:
        raise PreconditionError(f"missing certificate: {g} not in sqrt<{f}>")
    bwd = backward_cert or radical_membership(f, [g])
    if bwd is None:
        raise PreconditionError(f"missing certificate: {f} not in sqrt<{g}>")
    there = LocHom(LocRing(f), LocRing(g), fwd.k, fwd.coeffs[0], fwd)
    back = LocHom(LocRing(g), LocRing(f), bwd.k, bwd.coeffs[0], bwd)
    return Iso("mutual", there.source, there.target, there, back)


def lemma2_iso(case, *data):
    if case == "iterated":
        return iso_iterated(*data)
    if case == "unit":
        return iso_unit(*data)
    if case == "mutual":
        return iso_mutual(*data)
    raise UsageError(f"unknown isomorphism case {case!r}")


# ---------------------------------------------- universal-property check


def lemma1_conditions_check(phi, inverted, target, base_samples, target_samples):
    """Check that ``phi: R -> target`` exhibits ``target`` as ``R[1/inverted]``.

    The three clauses: ``phi(inverted)`` is a unit; anything killed by ``phi``
    is killed by a power of ``inverted``; every target element has the form
    ``phi(r) * phi(inverted)**-n``.
    """
    rep = Report("localization universal property")
    s = inverted
    image = phi(s)
    inv = loc_is_unit(image)
    rep.add("(i) image of denominator is a unit", inv is not None, f"phi({s}) = {image}")
    for i, r in enumerate(base_samples):
        if loc_eq(phi(r), target.zero):
            w = ann_power(s, r)
            rep.add(f"(ii) kernel #{i}", w is not None, f"{r}" + (f", k={w.k}" if w else ""))
    for i, t in enumerate(target_samples):
        ok = False
        detail = f"{t}"
        cert = radical_membership(s, [target.den])
        if inv is not None and cert is not None:
            # 1/den = d/s^l, so t = a*d^m / s^(l*m)
            r = t.num * cert.coeffs[0] ** t.exp
            n = cert.k * t.exp
            ok = loc_eq(phi(r) * inv**n, t)
            detail = f"{t} = phi({r}) * phi({s})^-{n}"
        rep.add(f"(iii) fraction form #{i}", ok, detail)
    return rep


def lemma1_check_hom(h, base_samples, target_samples):
    """:func:`lemma1_conditions_check` for a :class:`LocHom` composed with ``_/1``."""
    return lemma1_conditions_check(
        lambda r: h(h.source.from_base(r)), h.source.den, h.target, base_samples, target_samples
    )


def zero_map(source, target):
    """The (non-unital) map sending everything to zero, for negative tests."""
    return lambda a: target.zero
