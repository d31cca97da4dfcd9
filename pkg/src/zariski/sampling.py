"""Seeded random generators for the property suites and the CLI test commands."""
from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .lattice import LatticeElt
from .localization import LocElem, LocRing
from .rings import IntegerRing, ModularRing, MultiPolyRing, UniPolyRing
from .structure import spread


def random_elem(ring, rng, bound=20):
    if isinstance(ring, IntegerRing):
        return ring(rng.randint(-bound, bound))
    if isinstance(ring, ModularRing):
        return ring(rng.randrange(ring.modulus))
    if isinstance(ring, UniPolyRing):
        deg = rng.randint(-1, 3)
        coeffs = [_coeff(rng) for _ in range(deg + 1)]
        return sum((c * ring.gen() ** i for i, c in enumerate(coeffs)), ring.zero)
    if isinstance(ring, MultiPolyRing):
        out = ring.zero
        for _ in range(rng.randint(0, 3)):
            mono = ring.one
            for _ in range(rng.randint(0, 2)):
                mono = mono * ring.gen(rng.choice(ring.variables))
            out = out + rng.randint(-3, 3) * mono
        return out
    raise TypeError(f"no sampler for {ring}")


def _coeff(rng):
    if rng.random() < 0.2:
        return Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Fraction(rng.randint(-5, 5))


def random_lattice_elt(ring, rng, max_len=3):
    return LatticeElt(ring, tuple(random_elem(ring, rng) for _ in range(rng.randint(0, max_len))))


def random_loc_elem(loc, rng, max_exp=2):
    return LocElem(loc, random_elem(loc.ring, rng), rng.randint(0, max_exp))


def perturb(a, rng, max_extra=2):
    """Same fraction, different representation: ``r/f**n -> r*f**j / f**(n+j)``."""
    j = rng.randint(0, max_extra)
    return LocElem(a.loc, a.num * a.loc.den**j, a.exp + j)


def compatible_family(h, parts, rng):
    """Restrictions of a random element of ``R[1/h]``, each re-represented."""
    s = random_loc_elem(LocRing(h), rng)
    return s, tuple(perturb(x, rng) for x in spread(s, parts))


def incompatible_family(h, parts, rng):
    """A compatible family with ``1`` added to the last section."""
    if len(parts) < 2 or LocRing(parts[0] * parts[-1]).is_zero_ring:
        raise PreconditionError("every family on this cover is compatible")
    _, fam = compatible_family(h, parts, rng)
    last = fam[-1]
    return fam[:-1] + (last + last.loc.one,)


def random_chain(ring, rng):
    """``(f, g, e)`` with ``D(e) <= D(g) <= D(f)`` built from multiples and powers."""
    f = random_elem(ring, rng)
    g = f ** rng.randint(1, 2) * random_elem(ring, rng)
    e = g ** rng.randint(1, 2) * random_elem(ring, rng)
    return f, g, e
