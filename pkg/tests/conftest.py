import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from beltrami import make_field

FIELDS_D = (-1, 2, -5, 3, 5)

small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
discriminants = st.sampled_from([-1, 2, -5, 3, 5, -3, 7, Fraction(2, 3), Fraction(-1, 5)])
fields = discriminants.map(make_field)


def scalars(field):
    return st.builds(field, rationals, rationals)


def nonzero_scalars(field):
    return scalars(field).filter(bool)


def random_rational(rng, span=20, den=9):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_scalar(rng, field, nonzero=False):
    while True:
        z = field(random_rational(rng), random_rational(rng))
        if z or not nonzero:
            return z


@pytest.fixture(params=FIELDS_D, ids=lambda d: f"d={d}")
def field(request):
    return make_field(request.param)


@pytest.fixture
def rng():
    return random.Random(20170121)


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_RESULTS: dict[str, list[tuple[bool, str]]] = {}


def record_acceptance(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS.setdefault(criterion, []).append((ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE_RESULTS, key=lambda c: int(c.split()[0])):
        results = ACCEPTANCE_RESULTS[criterion]
        ok = all(r[0] for r in results)
        details = "; ".join(d for good, d in results if not good) or "; ".join(d for _, d in results)
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {details}")
