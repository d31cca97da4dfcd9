"""Concrete computable commutative rings with exact arithmetic.

Four descriptors are supported: the integers, the residues modulo ``n``,
univariate polynomials over Q and multivariate polynomials over Q. Elements
are :class:`RingElem` values in canonical form, so ``==`` is ring equality.

The first three rings are Bezout rings ("tier 1"): ideal and radical
membership are decided with gcd computations that track coefficients. The
multivariate ring ("tier 2") delegates to :mod:`zariski.groebner`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .certs import AnnPowerWitness, BezoutCert, RadicalCert
from .errors import InvariantError, UsageError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class RingElem:
    """An element of a ring, stored as a canonical raw value ``v``."""

    __slots__ = ("ring", "v")

    def __init__(self, ring, v):
        self.ring = ring
        self.v = v

    def _raw(self, other):
        if isinstance(other, RingElem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise UsageError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.v
        return self.ring._coerce(other)

    def __add__(self, other):
        return RingElem(self.ring, self.ring._add(self.v, self._raw(other)))

    __radd__ = __add__

    def __sub__(self, other):
        r = self.ring
        return RingElem(r, r._add(self.v, r._neg(self._raw(other))))

    def __rsub__(self, other):
        r = self.ring
        return RingElem(r, r._add(self._raw(other), r._neg(self.v)))

    def __mul__(self, other):
        return RingElem(self.ring, self.ring._mul(self.v, self._raw(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring._neg(self.v))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise UsageError(f"exponent must be a non-negative integer, got {k!r}")
        return RingElem(self.ring, self.ring._pow(self.v, k))

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.v == other.v
        if isinstance(other, (int, Fraction)):
            try:
                return self.v == self.ring._coerce(other)
            except UsageError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.v))

    def is_zero(self):
        return self.v == self.ring._zero

    def __str__(self):
        return self.ring.format(self.v)

    def __repr__(self):
        return f"<{self.ring}: {self}>"


class Ring:
    """Shared behaviour of ring descriptors. Subclasses are frozen dataclasses."""

    tier = 1
    is_domain = True

    def __call__(self, x):
        if isinstance(x, RingElem):
            if x.ring != self:
                raise UsageError(f"ring mismatch: {self} vs {x.ring}")
            return x
        if isinstance(x, str):
            from .syntax import parse_elem

            return parse_elem(x, self)
        return RingElem(self, self._coerce(x))

    @property
    def zero(self):
        return RingElem(self, self._zero)

    @property
    def one(self):
        return RingElem(self, self._one)

    def elems(self, *xs):
        return tuple(self(x) for x in xs)

    def _pow(self, a, k):
        result = self._one
        while k:
            if k & 1:
                result = self._mul(result, a)
            k >>= 1
            if k:
                a = self._mul(a, a)
        return result

    def _gcd(self, a, b):
        return self._gcdex(a, b)[0]

    def _gcd_all(self, gens):
        """Generator of ``<gens>`` without the cofactors."""
        g = self._zero
        for a in gens:
            g = self._gcd(g, a)
        return g

    def _gcd_chain(self, gens):
        """Fold ``_gcdex`` over ``gens``: returns ``(g, coeffs)`` with
        ``sum(coeffs[i] * gens[i]) == g``."""
        g, coeffs = self._zero, []
        for a in gens:
            g, s, t = self._gcdex(g, a)
            coeffs = [self._mul(s, c) for c in coeffs] + [t]
        return g, coeffs


# ---------------------------------------------------------------- integers


def _int_gcdex(a, b):
    """Extended gcd normalised so that ``0 <= s < |b|/g`` whenever ``b != 0``."""
    if a == 0 and b == 0:
        return 0, 1, 0
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g, s, t = old_r, old_s, old_t
    if g < 0:
        g, s, t = -g, -s, -t
    if b:
        s %= abs(b) // g
        t = (g - a * s) // b
    return g, s, t


def _coerce_int(x):
    if isinstance(x, bool):
        raise UsageError("booleans are not ring elements")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise UsageError(f"cannot interpret {x!r} as an integer")


@dataclass(frozen=True)
class IntegerRing(Ring):
    _zero = 0
    _one = 1

    def __str__(self):
        return "Z"

    def _coerce(self, x):
        return _coerce_int(x)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _pow(self, a, k):
        return a**k

    def format(self, v):
        return str(v)

    def _inverse(self, a):
        return a if a in (1, -1) else None

    def _gcdex(self, a, b):
        return _int_gcdex(a, b)

    def _gcd(self, a, b):
        return math.gcd(a, b)

    def _quo(self, a, b):
        if b == 0:
            return 0 if a == 0 else None
        q, r = divmod(a, b)
        return q if r == 0 else None

    def _kbound(self, g):
        return max(1, g.bit_length())


@dataclass(frozen=True)
class ModularRing(Ring):
    modulus: int

    is_domain = False
    _zero = 0

    def __post_init__(self):
        if isinstance(self.modulus, bool) or not isinstance(self.modulus, int) or self.modulus < 2:
            raise UsageError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @property
    def _one(self):
        return 1 % self.modulus

    def __str__(self):
        return f"Z/{self.modulus}"

    def _coerce(self, x):
        return _coerce_int(x) % self.modulus

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _mul(self, a, b):
        return a * b % self.modulus

    def _neg(self, a):
        return -a % self.modulus

    def _pow(self, a, k):
        return pow(a, k, self.modulus)

    def format(self, v):
        return str(v)

    def _inverse(self, a):
        if math.gcd(a, self.modulus) != 1:
            return None
        return pow(a, -1, self.modulus)

    # Ideal computations run on integer representatives with the modulus
    # adjoined as an implicit generator; g is then a positive divisor of n.
    def _gcd_chain(self, gens):
        g, coeffs = 0, []
        for a in list(gens) + [self.modulus]:
            g, s, t = _int_gcdex(g, a)
            coeffs = [s * c for c in coeffs] + [t]
        return g, [c % self.modulus for c in coeffs[:-1]]

    def _gcd(self, a, b):
        return math.gcd(a, b)

    def _gcd_all(self, gens):
        return math.gcd(*gens, self.modulus)

    def _quo(self, a, b):
        return a // b if a % b == 0 else None

    def _kbound(self, g):
        return max(1, g.bit_length())


# ----------------------------------------------------- univariate over Q

_P1 = (Fraction(1),)


def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    return _ptrim(tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pscale(a, c):
    return _ptrim(x * c for x in a) if c else ()


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1] / lead
        if c:
            q[i] = c
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    return _ptrim(q), _ptrim(rem[: len(b) - 1])


def _poly_gcd(a, b):
    """Monic gcd, no cofactors."""
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return _pscale(a, 1 / a[-1]) if a else ()


def _poly_gcdex(a, b):
    if not a and not b:
        return (), _P1, ()
    if a and len(b) > len(a) and not _pdivmod(b, a)[1]:
        # a | b: this is what the general branch returns after normalising
        inv = 1 / a[-1]
        return _pscale(a, inv), (inv,), ()
    old_r, r = a, b
    old_s, s = _P1, ()
    old_t, t = (), _P1
    while r:
        q, rem = _pdivmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _psub(old_s, _pmul(q, s))
        old_t, t = t, _psub(old_t, _pmul(q, t))
    inv = 1 / old_r[-1]
    g, s, t = _pscale(old_r, inv), _pscale(old_s, inv), _pscale(old_t, inv)
    if b:
        s = _pdivmod(s, _pdivmod(b, g)[0])[1]
        t = _pdivmod(_psub(g, _pmul(a, s)), b)[0]
    return g, s, t


def _fmt_coeff(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_terms(terms):
    """Render ``(coeff, monomial_text)`` pairs, highest term first."""
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _coerce_q(x):
    if isinstance(x, bool):
        raise UsageError("booleans are not ring elements")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise UsageError(f"cannot interpret {x!r} as a rational constant")


@dataclass(frozen=True)
class UniPolyRing(Ring):
    """Q[var]; elements are coefficient tuples, constant term first."""

    var: str = "x"

    _zero = ()
    _one = _P1

    def __post_init__(self):
        if not isinstance(self.var, str) or not _NAME.match(self.var):
            raise UsageError(f"invalid variable name {self.var!r}")

    def __str__(self):
        return f"Q[{self.var}]"

    def gen(self):
        return RingElem(self, (Fraction(0), Fraction(1)))

    def _coerce(self, x):
        c = _coerce_q(x)
        return (c,) if c else ()

    def _add(self, a, b):
        return _padd(a, b)

    def _mul(self, a, b):
        return _pmul(a, b)

    def _neg(self, a):
        return _pneg(a)

    def format(self, v):
        terms = []
        for d in range(len(v) - 1, -1, -1):
            if v[d]:
                mono = "" if d == 0 else self.var if d == 1 else f"{self.var}^{d}"
                terms.append((v[d], mono))
        return _fmt_terms(terms)

    def _inverse(self, a):
        return (1 / a[0],) if len(a) == 1 else None

    def _gcdex(self, a, b):
        return _poly_gcdex(a, b)

    def _gcd(self, a, b):
        return _poly_gcd(a, b)

    def _quo(self, a, b):
        if not b:
            return () if not a else None
        q, r = _pdivmod(a, b)
        return q if not r else None

    def _kbound(self, g):
        return max(1, len(g) - 1)

    def degree(self, a):
        return len(a.v) - 1


# --------------------------------------------------- multivariate over Q


def grevlex_key(exp):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def mp_from_dict(d):
    return tuple(sorted(((e, c) for e, c in d.items() if c), key=lambda t: grevlex_key(t[0]), reverse=True))


def mp_add_into(acc, p, scale=1, shift=None):
    """``acc += scale * x**shift * p`` in place for dict polynomials."""
    for e, c in p.items():
        if shift is not None:
            e = tuple(a + b for a, b in zip(e, shift))
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    return acc


def mp_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


@dataclass(frozen=True)
class MultiPolyRing(Ring):
    """Q[variables]; elements are grevlex-sorted ``(exponent, coeff)`` tuples."""

    variables: tuple = ("x", "y")

    tier = 2
    _zero = ()

    def __post_init__(self):
        vs = tuple(self.variables)
        object.__setattr__(self, "variables", vs)
        if not vs:
            raise UsageError("a multivariate ring needs at least one variable")
        if len(set(vs)) != len(vs):
            raise UsageError(f"duplicate variables in {vs}")
        for v in vs:
            if not isinstance(v, str) or not _NAME.match(v):
                raise UsageError(f"invalid variable name {v!r}")

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def _one(self):
        return (((0,) * len(self.variables), Fraction(1)),)

    def __str__(self):
        return f"Q[{','.join(self.variables)}]"

    def gen(self, name):
        if name not in self.variables:
            raise UsageError(f"unknown variable {name!r} for {self}")
        e = tuple(int(v == name) for v in self.variables)
        return RingElem(self, ((e, Fraction(1)),))

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def from_dict(self, d):
        return RingElem(self, mp_from_dict(d))

    def to_dict(self, a):
        return dict(a.v if isinstance(a, RingElem) else a)

    def _coerce(self, x):
        c = _coerce_q(x)
        return (((0,) * len(self.variables), c),) if c else ()

    def _add(self, a, b):
        return mp_from_dict(mp_add_into(dict(a), dict(b)))

    def _mul(self, a, b):
        return mp_from_dict(mp_mul(dict(a), dict(b)))

    def _neg(self, a):
        return tuple((e, -c) for e, c in a)

    def format(self, v):
        terms = []
        for e, c in v:
            parts = []
            for name, k in zip(self.variables, e):
                if k == 1:
                    parts.append(name)
                elif k > 1:
                    parts.append(f"{name}^{k}")
            terms.append((c, "*".join(parts)))
        return _fmt_terms(terms)

    def _inverse(self, a):
        if len(a) == 1 and not any(a[0][0]):
            return (((0,) * len(self.variables), 1 / a[0][1]),)
        return None


# ------------------------------------------------------------- operations


def _common_ring(x, gens):
    ring = x.ring
    for g in gens:
        if not isinstance(g, RingElem) or g.ring != ring:
            raise UsageError(f"generator {g!r} is not in {ring}")
    return ring


def linear_combination(coeffs, gens, ring):
    total = ring.zero
    for c, g in zip(coeffs, gens):
        total = total + c * g
    return total


def is_unit(a):
    """Return the inverse of ``a`` or ``None`` when ``a`` is not a unit."""
    inv = a.ring._inverse(a.v)
    if inv is None:
        return None
    inv = RingElem(a.ring, inv)
    if a * inv != a.ring.one:
        raise InvariantError(f"bad inverse {inv} for {a}")
    return inv


def ring_gcd(gens, ring):
    """Canonical generator of the ideal ``<gens>`` in a tier-1 ring."""
    if ring.tier != 1:
        raise UsageError(f"{ring} is not a Bezout ring")
    g, _ = ring._gcd_chain([a.v for a in gens])
    return ring(g) if isinstance(ring, ModularRing) else RingElem(ring, g)


def ideal_membership(x, gens):
    """Coefficients ``c`` with ``sum(c[i] * gens[i]) == x``, or ``None``."""
    gens = tuple(gens)
    ring = _common_ring(x, gens)
    if ring.tier == 2:
        from .groebner import mv_ideal_membership

        return mv_ideal_membership(x, gens)
    g, coeffs = ring._gcd_chain([a.v for a in gens])
    q = ring._quo(x.v, g)
    if q is None:
        return None
    out = tuple(RingElem(ring, ring._mul(q, c)) for c in coeffs)
    if linear_combination(out, gens, ring) != x:
        raise InvariantError(f"membership coefficients for {x} do not re-verify")
    return out


def bezout(gens, ring):
    """A :class:`BezoutCert` for ``1 in <gens>``, or ``None``."""
    gens = tuple(gens)
    coeffs = ideal_membership(ring.one, gens)
    return None if coeffs is None else BezoutCert(ring, gens, coeffs)


def _min_exponent(x, g, ring):
    """Least ``k >= 1`` with ``g | x**k``, given that one exists."""
    bound = ring._kbound(g)

    def member(k):
        return ring._quo(ring._pow(x, k), g) is not None

    hi = 1
    while not member(hi):
        if hi > bound:
            raise InvariantError(f"exponent search exceeded bound {bound}")
        hi *= 2
    lo = hi // 2  # not a member (or 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if member(mid):
            hi = mid
        else:
            lo = mid
    return hi


def radical_membership(x, gens):
    """A :class:`RadicalCert` for ``x in sqrt(<gens>)`` with minimal ``k``, or ``None``."""
    gens = tuple(gens)
    ring = _common_ring(x, gens)
    if ring.tier == 2:
        from .groebner import mv_radical_membership

        return mv_radical_membership(x, gens)
    g = ring._gcd_all([a.v for a in gens])
    if g == ring._zero:
        # zero ideal of a domain: only 0 is nilpotent
        if not x.is_zero():
            return None
        return RadicalCert(x, gens, 1, tuple(ring.zero for _ in gens))
    residual = g
    while True:
        d = ring._gcd(residual, x.v)
        if d == ring._one:
            break
        residual = ring._quo(residual, d)
    if ring._inverse(residual) is None:
        return None
    k = _min_exponent(x.v, g, ring)
    coeffs = ideal_membership(x**k, gens)
    if coeffs is None:
        raise InvariantError(f"{x}^{k} not in ideal after radical test")
    return RadicalCert(x, gens, k, coeffs)


def ann_power(f, x):
    """Least ``k`` with ``f**k * x == 0`` as an :class:`AnnPowerWitness`, or ``None``."""
    ring = _common_ring(x, (f,))
    if x.is_zero():
        return AnnPowerWitness(f, x, 0)
    if ring.is_domain:
        return AnnPowerWitness(f, x, 1) if f.is_zero() else None
    n = ring.modulus
    acc = x
    for k in range(1, (n - 1).bit_length() + 1):
        acc = acc * f
        if acc.is_zero():
            return AnnPowerWitness(f, x, k)
    return None
