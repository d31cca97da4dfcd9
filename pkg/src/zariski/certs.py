"""Certificates: explicit witnesses for every existential the algorithms use.

Each certificate carries the statement it certifies, so ``verify()`` needs
nothing else. Construction is observable through :func:`audit`, which
collects every certificate emitted inside the block for later re-checking.
"""
from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field

_active: ContextVar[tuple] = ContextVar("zariski_cert_audits", default=())


def _record(cert):
    for a in _active.get():
        a.record(cert)


def _combination(coeffs, gens, ring):
    total = ring.zero
    for c, g in zip(coeffs, gens):
        total = total + c * g
    return total


@dataclass(frozen=True)
class RadicalCert:
    """``x**k == sum(coeffs[i] * gens[i])`` with ``k >= 1``."""

    x: object
    gens: tuple
    k: int
    coeffs: tuple

    def __post_init__(self):
        _record(self)

    def verify(self):
        if self.k < 1 or len(self.coeffs) != len(self.gens):
            return False
        return self.x ** self.k == _combination(self.coeffs, self.gens, self.x.ring)

    def render(self):
        return f"k={self.k} coeffs=[{', '.join(str(c) for c in self.coeffs)}]"


@dataclass(frozen=True)
class BezoutCert:
    """``sum(coeffs[i] * gens[i]) == 1``."""

    ring: object
    gens: tuple
    coeffs: tuple

    def __post_init__(self):
        _record(self)

    def verify(self):
        if len(self.coeffs) != len(self.gens):
            return False
        return _combination(self.coeffs, self.gens, self.ring) == self.ring.one

    def render(self):
        return f"coeffs=[{', '.join(str(c) for c in self.coeffs)}]"


@dataclass(frozen=True)
class AnnPowerWitness:
    """``f**k * x == 0``."""

    f: object
    x: object
    k: int

    def __post_init__(self):
        _record(self)

    def verify(self):
        return self.k >= 0 and (self.f ** self.k * self.x).is_zero()

    def render(self):
        return f"k={self.k}"


@dataclass
class CertificateAudit:
    """Certificates seen inside an :func:`audit` block.

    With ``keep=False`` each certificate is re-verified on arrival and only
    the tallies and the failures are retained.
    """

    keep: bool = True
    emitted: list = field(default_factory=list)
    _tally: Counter = field(default_factory=Counter)
    _bad: list = field(default_factory=list)

    def record(self, cert):
        if self.keep:
            self.emitted.append(cert)
            return
        ok = cert.verify()
        self._tally[type(cert).__name__, ok] += 1
        if not ok:
            self._bad.append(cert)

    def results(self):
        """Re-verify everything collected; returns ``(kind, ok)`` counts."""
        if not self.keep:
            return Counter(self._tally)
        return Counter((type(c).__name__, c.verify()) for c in self.emitted)

    def failures(self):
        if not self.keep:
            return list(self._bad)
        return [c for c in self.emitted if not c.verify()]

    def total(self):
        return len(self.emitted) if self.keep else sum(self._tally.values())


@contextmanager
def audit(keep=True):
    """Collect every certificate constructed inside the block."""
    a = CertificateAudit(keep)
    token = _active.set(_active.get() + (a,))
    try:
        yield a
    finally:
        _active.reset(token)


@contextmanager
def unaudited():
    """Suspend all audits, e.g. while rebuilding a certificate supplied from outside."""
    token = _active.set(())
    try:
        yield
    finally:
        _active.reset(token)
