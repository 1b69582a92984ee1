import sys

import pytest
from hypothesis import settings, strategies as st

from kslab.bipoly import XY, ZW, BiPoly
from kslab.scalar import QQ, QQI, GaussianRational, ext_field, prime_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

F7 = prime_field(7)
F9 = ext_field(3, 2)
F25 = ext_field(5, 2)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)


def scalars(field):
    if field == QQ:
        return rationals
    if field == QQI:
        return gaussians
    if hasattr(field, "from_index"):
        return st.integers(0, field.order - 1).map(field.from_index)
    return st.integers(0, field.p - 1).map(field)


FIELDS = [QQ, QQI, F7, F9]


@st.composite
def polys(draw, field=QQ, max_deg=3, max_terms=5, vars=ZW):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)).filter(lambda e: sum(e) <= max_deg)
    terms = draw(st.dictionaries(exps, scalars(field), max_size=max_terms))
    return BiPoly(terms, field, vars)


@st.composite
def field_and_poly(draw, max_deg=3, max_terms=5):
    F = draw(st.sampled_from(FIELDS))
    fam = draw(st.sampled_from([ZW, XY]))
    return F, draw(polys(F, max_deg, max_terms, fam))


@pytest.fixture
def zw():
    return BiPoly.monomial(1, 0), BiPoly.monomial(0, 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
