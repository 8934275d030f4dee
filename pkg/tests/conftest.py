import os
import random

import pytest
from hypothesis import HealthCheck, settings

from semigb.polyring import PolyRing, PolySequence

settings.register_profile(
    "default", max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "60")),
    deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

EXAMPLE = [
    "x1^2 + 3*x1*x2 - 2*x1*x3 - x1 + x2^2 - 2*x2*x3 - 2*x2 + x3^2 + x3",
    "4*x1^2 + 3*x1*x2 + 4*x1*x3 - 2*x1 - x2 + x3^2 + 2*x3",
    "3*x1^2 - x1 + 9*x2^2 - 6*x2*x3 + x2 + x3^2 - x3",
    "x1^2 - 6*x1*x2 + 2*x1*x3 - 2*x1 + 9*x2^2 - 6*x2*x3 + x2 + 2*x3^2",
]


@pytest.fixture(scope="session")
def R73():
    return PolyRing(73, 3)


@pytest.fixture(scope="session")
def F(R73):
    return PolySequence(tuple(R73.parse(s) for s in EXAMPLE))


@pytest.fixture(scope="session")
def Ftop(F):
    return F.top()


@pytest.fixture(scope="session")
def Fh(F):
    return F.homogenize()


def mono(ring, text):
    return ring.parse(text).LM


def random_sequence(seed, p, n, degrees, homogeneous=False):
    rng = random.Random(seed)
    R = PolyRing(p, n)
    polys = []
    for d in degrees:
        terms = {}
        for k in range(d if homogeneous else 0, d + 1):
            for m in R.monomials(k):
                if rng.random() < 0.6:
                    terms[m] = rng.randrange(p)
        terms[R.monomials(d)[rng.randrange(len(R.monomials(d)))]] = rng.randrange(1, p)
        polys.append(R.poly(terms))
    return PolySequence(tuple(polys))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
