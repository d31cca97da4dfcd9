"""Groebner bases over Q with cofactor tracking.

Everything here works on dict polynomials ``{exponent_tuple: Fraction}``
internally and converts to :class:`RingElem` at the boundary. The monomial
order is graded reverse lexicographic throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .certs import RadicalCert
from .errors import InvariantError, ResourceError, UsageError
from .rings import MultiPolyRing, RingElem, grevlex_key, linear_combination, mp_add_into, mp_mul

ORDER = "grevlex"
DEFAULT_PAIR_BUDGET = 100_000


def _lead(p):
    return max(p, key=grevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _diff(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _reduce(p, basis, leads):
    """Full reduction of dict ``p`` by ``basis``; returns ``(remainder, quotients)``."""
    p = dict(p)
    quots = [{} for _ in basis]
    rem = {}
    while p:
        lt = _lead(p)
        c = p[lt]
        for i, (b, lm) in enumerate(zip(basis, leads)):
            if _divides(lm, lt):
                shift = _diff(lt, lm)
                factor = c / b[lm]
                quots[i][shift] = quots[i].get(shift, 0) + factor
                mp_add_into(p, b, -factor, shift)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem, quots


def _check_ring(elems):
    ring = None
    for e in elems:
        if not isinstance(e, RingElem) or not isinstance(e.ring, MultiPolyRing):
            raise UsageError(f"{e!r} is not a multivariate polynomial")
        if ring is None:
            ring = e.ring
        elif e.ring != ring:
            raise UsageError(f"ring mismatch: {ring} vs {e.ring}")
    return ring


def divide_with_cofactors(p, basis):
    """Multivariate division: ``p == sum(q[i] * basis[i]) + r``.

    No monomial of ``r`` is divisible by a leading monomial of ``basis``.
    Zero entries of ``basis`` are skipped and get a zero cofactor.
    """
    basis = tuple(basis)
    ring = _check_ring((p,) + basis)
    live = [(i, dict(b.v)) for i, b in enumerate(basis) if b.v]
    rem, quots = _reduce(dict(p.v), [b for _, b in live], [_lead(b) for _, b in live])
    cof = [ring.zero] * len(basis)
    for (i, _), q in zip(live, quots):
        cof[i] = ring.from_dict(q)
    return ring.from_dict(rem), tuple(cof)


@dataclass(frozen=True)
class GroebnerBasis:
    gens: tuple
    basis: tuple
    transform: tuple  # transform[i][j]: coefficient of gens[j] in basis[i]
    order: str = ORDER

    def verify(self):
        ring = self.gens[0].ring if self.gens else None
        for b, row in zip(self.basis, self.transform):
            if linear_combination(row, self.gens, ring) != b:
                return False
        leads = [_lead(dict(b.v)) for b in self.basis]
        polys = [dict(b.v) for b in self.basis]
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                s = _spoly(polys[i], leads[i], polys[j], leads[j])
                if _reduce(s, polys, leads)[0]:
                    return False
        return True


def _spoly(p, lp, q, lq):
    m = _lcm(lp, lq)
    s = mp_add_into({}, p, 1 / p[lp], _diff(m, lp))
    return mp_add_into(s, q, -1 / q[lq], _diff(m, lq))


def _row_combine(acc, row, scale, shift):
    for a, r in zip(acc, row):
        mp_add_into(a, r, scale, shift)


def _groebner(gens, nvars, pair_budget):
    """Buchberger on dict polynomials. Returns ``(basis, rows)``, reduced and monic."""
    n = len(gens)
    zero_exp = (0,) * nvars
    polys, rows = [], []
    for j, g in enumerate(gens):
        if g:
            c = 1 / g[_lead(g)]
            polys.append({e: v * c for e, v in g.items()})
            rows.append([{zero_exp: c} if k == j else {} for k in range(n)])
    leads = [_lead(p) for p in polys]
    pairs = [(i, j) for j in range(len(polys)) for i in range(j)]
    spent = 0
    while pairs:
        pairs.sort(key=lambda ij: grevlex_key(_lcm(leads[ij[0]], leads[ij[1]])), reverse=True)
        i, j = pairs.pop()
        spent += 1
        if spent > pair_budget:
            raise ResourceError(f"Buchberger exceeded {pair_budget} S-pairs")
        li, lj = leads[i], leads[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        m = _lcm(li, lj)
        s = _spoly(polys[i], li, polys[j], lj)
        srow = [{} for _ in range(n)]
        _row_combine(srow, rows[i], 1 / polys[i][li], _diff(m, li))
        _row_combine(srow, rows[j], -1 / polys[j][lj], _diff(m, lj))
        r, quots = _reduce(s, polys, leads)
        if not r:
            continue
        for k, q in enumerate(quots):
            for shift, c in q.items():
                _row_combine(srow, rows[k], -c, shift)
        lr = _lead(r)
        c = 1 / r[lr]
        r = {e: v * c for e, v in r.items()}
        srow = [{e: v * c for e, v in a.items()} for a in srow]
        pairs.extend((k, len(polys)) for k in range(len(polys)))
        polys.append(r)
        rows.append(srow)
        leads.append(lr)
        if not any(lr):
            break  # unit ideal
    # minimalise, then interreduce
    keep = []
    for i, li in enumerate(leads):
        if any(_divides(leads[k], li) and (leads[k] != li or k < i) for k in range(len(leads)) if k != i):
            continue
        keep.append(i)
    polys = [polys[i] for i in keep]
    rows = [rows[i] for i in keep]
    leads = [leads[i] for i in keep]
    for i in range(len(polys)):
        others = [k for k in range(len(polys)) if k != i]
        r, quots = _reduce(polys[i], [polys[k] for k in others], [leads[k] for k in others])
        row = [dict(a) for a in rows[i]]
        for k, q in zip(others, quots):
            for shift, c in q.items():
                _row_combine(row, rows[k], -c, shift)
        polys[i], rows[i] = r, row
    order = sorted(range(len(polys)), key=lambda i: grevlex_key(leads[i]), reverse=True)
    return [polys[i] for i in order], [rows[i] for i in order]


@lru_cache(maxsize=512)
def _cached_groebner(ring, gens_v, pair_budget):
    basis, rows = _groebner([dict(g) for g in gens_v], ring.nvars, pair_budget)
    gens = tuple(RingElem(ring, g) for g in gens_v)
    return GroebnerBasis(
        gens,
        tuple(ring.from_dict(b) for b in basis),
        tuple(tuple(ring.from_dict(a) for a in row) for row in rows),
    )


def buchberger(gens, pair_budget=DEFAULT_PAIR_BUDGET):
    """Reduced Groebner basis of ``<gens>`` with the transform back to ``gens``."""
    gens = tuple(gens)
    ring = _check_ring(gens)
    if ring is None:
        raise UsageError("buchberger needs at least one generator to know the ring")
    gb = _cached_groebner(ring, tuple(g.v for g in gens), pair_budget)
    for b, row in zip(gb.basis, gb.transform):
        if linear_combination(row, gens, ring) != b:
            raise InvariantError("Groebner transform row does not re-verify")
    return gb


def mv_ideal_membership(x, gens):
    gens = tuple(gens)
    ring = _check_ring((x,) + gens)
    if not gens:
        return () if x.is_zero() else None
    gb = buchberger(gens)
    r, q = divide_with_cofactors(x, gb.basis)
    if not r.is_zero():
        return None
    coeffs = tuple(
        linear_combination(q, [row[j] for row in gb.transform], ring) for j in range(len(gens))
    )
    if linear_combination(coeffs, gens, ring) != x:
        raise InvariantError(f"membership coefficients for {x} do not re-verify")
    return coeffs


def _fresh_name(ring):
    name, i = "t", 0
    while name in ring.variables:
        i += 1
        name = f"t{i}"
    return name


def rabinowitsch_certificate(x, gens):
    """Decide ``x in sqrt(<gens>)`` via ``1 in <gens, 1 - t*x>``.

    On success the combination for 1 is evaluated at ``t = 1/x`` and the
    denominators cleared, giving ``x**k == sum(c[i] * gens[i])``.
    """
    gens = tuple(gens)
    ring = _check_ring((x,) + gens)
    big = MultiPolyRing(ring.variables + (_fresh_name(ring),))

    def lift(p):
        return big.from_dict({e + (0,): c for e, c in p.v})

    t = big.gen(big.variables[-1])
    lifted = tuple(lift(g) for g in gens) + (1 - t * lift(x),)
    coeffs = mv_ideal_membership(big.one, lifted)
    if coeffs is None:
        return None
    top = max((e[-1] for c in coeffs[:-1] for e, _ in c.v), default=0)
    k = max(top, 1)
    xd = dict(x.v)
    result = []
    for c in coeffs[:-1]:
        acc = {}
        for e, v in c.v:
            term = {e[:-1]: v}
            for _ in range(k - e[-1]):
                term = mp_mul(term, xd)
            mp_add_into(acc, term)
        result.append(ring.from_dict(acc))
    cert = RadicalCert(x, gens, k, tuple(result))
    if not cert.verify():
        raise InvariantError("Rabinowitsch certificate does not re-verify")
    return cert


def mv_radical_membership(x, gens):
    """Radical certificate with minimal exponent, or ``None``."""
    gens = tuple(gens)
    ring = _check_ring((x,) + gens)
    if x.is_zero():
        return RadicalCert(x, gens, 1, tuple(ring.zero for _ in gens))
    rab = rabinowitsch_certificate(x, gens)
    if rab is None:
        return None
    # x^k in I is monotone in k, so binary search below the extracted bound
    lo, hi = 0, rab.k
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mv_ideal_membership(x**mid, gens) is None:
            lo = mid
        else:
            hi = mid
    coeffs = mv_ideal_membership(x**hi, gens)
    if coeffs is None:
        raise InvariantError(f"{x}^{hi} not in ideal after Rabinowitsch test")
    return RadicalCert(x, gens, hi, coeffs)
