import sys
import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from zariski import certs
from zariski.rings import IntegerRing, ModularRing, MultiPolyRing, UniPolyRing

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

Z = IntegerRing()
Z12 = ModularRing(12)
QX = UniPolyRing("x")
QXY = MultiPolyRing(("x", "y"))

TIER1 = {"Z": Z, "Z/12": Z12, "Q[x]": QX}


@pytest.fixture(scope="session", autouse=True)
def certificate_audit(request):
    """Every certificate built during the run is re-verified on arrival."""
    with certs.audit(keep=False) as a:
        request.config._cert_audit = a
        yield a


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    acc = sys.modules.get("test_acceptance")
    if acc is not None and acc.RESULTS:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in acc.RESULTS:
            terminalreporter.write_line(line)
    a = getattr(config, "_cert_audit", None)
    if a is None:
        return
    tally = a.results()
    total = sum(tally.values())
    bad = sum(n for (_, ok), n in tally.items() if not ok)
    terminalreporter.write_sep("-", "certificate audit")
    for kind in sorted({k for k, _ in tally}):
        terminalreporter.write_line(f"{kind}: {tally[kind, True]} verified, {tally[kind, False]} failed")
    terminalreporter.write_line(f"total {total}, re-verified {total - bad} ({'100%' if not bad else 'FAIL'})")


def pytest_sessionfinish(session, exitstatus):
    a = getattr(session.config, "_cert_audit", None)
    if a is not None and a.failures() and session.exitstatus == 0:
        session.exitstatus = 1


small_ints = st.integers(-30, 30)
fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))


def z_elems():
    return small_ints.map(Z)


def z12_elems():
    return st.integers(0, 11).map(Z12)


def qx_elems(max_deg=3):
    return st.lists(fracs, max_size=max_deg + 1).map(
        lambda cs: sum((c * QX.gen() ** i for i, c in enumerate(cs)), QX.zero)
    )


def qxy_elems():
    x, y = QXY.gens()
    mono = st.sampled_from([QXY.one, x, y, x * y, x**2, y**2])
    return st.lists(st.tuples(st.integers(-2, 2), mono), max_size=3).map(
        lambda ts: sum((c * m for c, m in ts), QXY.zero)
    )


ELEMS = {"Z": z_elems, "Z/12": z12_elems, "Q[x]": qx_elems}
