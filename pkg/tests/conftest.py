import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from genocchi.polynomial import Polynomial

settings.register_profile("default", deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=30)


def polynomials(max_degree=12):
    return st.lists(rationals, max_size=max_degree + 1).map(Polynomial)


def random_rational(rng: random.Random, bound=20, max_den=30) -> Fraction:
    return Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))


def random_polynomial(rng: random.Random, max_degree=12) -> Polynomial:
    return Polynomial(random_rational(rng) for _ in range(rng.randint(0, max_degree) + 1))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                rows.append((props["criterion"], outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(rows):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {number:>2}. {title}")
