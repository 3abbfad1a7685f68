import itertools
import random

import pytest
from hypothesis import settings, strategies as st

from polymat.monomial import Monomial, MonomialIdeal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def monomials(n, max_exp=3):
    return st.lists(st.integers(0, max_exp), min_size=n, max_size=n).map(Monomial)


@st.composite
def ideals(draw, min_n=1, max_n=4, max_exp=3, max_gens=5):
    n = draw(st.integers(min_n, max_n))
    gens = draw(st.lists(monomials(n, max_exp).filter(lambda m: not m.is_one()), min_size=1, max_size=max_gens))
    return MonomialIdeal(n, tuple(gens))


def brute_exchange(I):
    """Direct transcription of the exchange axiom, for use as an oracle."""
    gens = set(I.generators)
    for u, v in itertools.product(gens, repeat=2):
        for i in range(I.n):
            if u[i] <= v[i]:
                continue
            if not any(
                u[j] < v[j] and tuple(u[k] - (k == i) + (k == j) for k in range(I.n)) in gens
                for j in range(I.n)
            ):
                return False
    return True


@pytest.fixture(scope="session")
def poly_corpus():
    from polymat.verify import polymatroidal_corpus

    return polymatroidal_corpus(seed=2026)


@pytest.fixture(scope="session")
def small_poly_corpus(poly_corpus):
    rng = random.Random(7)
    small = [I for I in poly_corpus if I.n <= 5 and len(I) <= 15]
    return rng.sample(small, min(120, len(small)))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
