import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from malmquist.equation import req_from_forms
from malmquist.errors import CommonFactor, ZeroDenominator
from malmquist.forms import BiForm
from malmquist.poly import UPoly, ratfunc_reduce

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60
)
settings.load_profile("default")

small_ints = st.integers(-6, 6)
small_rats = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


def upolys(max_deg=4, coeffs=small_rats):
    return st.lists(coeffs, max_size=max_deg + 1).map(UPoly)


def nonzero_upolys(max_deg=4, coeffs=small_rats):
    return upolys(max_deg, coeffs).filter(lambda p: not p.is_zero())


def biforms(d, max_degz=2, coeffs=small_ints):
    return st.lists(upolys(max_degz, coeffs), min_size=d + 1, max_size=d + 1).map(BiForm)


def ratfuncs(max_deg=3, coeffs=small_ints):
    return st.tuples(upolys(max_deg, coeffs), nonzero_upolys(max_deg, coeffs)).map(
        lambda t: ratfunc_reduce(*t)
    )


def random_upoly(rng, deg, lo=-5, hi=5):
    return UPoly([rng.randint(lo, hi) for _ in range(deg + 1)])


def random_ratfunc(rng, max_deg, lo=-5, hi=5):
    while True:
        num = random_upoly(rng, rng.randint(0, max_deg), lo, hi)
        den = random_upoly(rng, rng.randint(0, max_deg), lo, hi)
        if not den.is_zero():
            return ratfunc_reduce(num, den)


def random_req(rng, kind, d, max_degz, lo=-3, hi=3):
    """A random canonical equation with exactly the requested d."""
    while True:
        P = BiForm([random_upoly(rng, rng.randint(0, max_degz), lo, hi) for _ in range(d + 1)])
        Q = BiForm([random_upoly(rng, rng.randint(0, max_degz), lo, hi) for _ in range(d + 1)])
        try:
            R = req_from_forms(kind, P, Q)
        except (CommonFactor, ZeroDenominator, ValueError):
            continue
        if R.d == d:
            return R


def rng_for(seed):
    return random.Random(seed)


# -- acceptance summary: one PASS/FAIL line per criterion --------------------------------


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")
    config._criteria = {}


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            config._criteria.setdefault(mark.args[0], [mark.args[1], True, False])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    entry = item.config._criteria[mark.args[0]]
    if rep.when == "call":
        entry[2] = True
    if rep.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(config._criteria):
        title, ok, ran = config._criteria[n]
        status = "PASS" if ok and ran else ("FAIL" if ran or not ok else "NOT RUN")
        terminalreporter.write_line(f"{status} criterion {n}: {title}")
