import itertools
from math import comb

import pytest

from polymat.errors import BudgetExceeded
from polymat.families import (
    VeroneseSpec,
    almost_squarefree_veronese,
    enumerate_matroidal,
    product_of_primes,
    squarefree_veronese,
    transversal,
    veronese_type,
)
from polymat.monomial import Monomial, MonomialIdeal, support_and_gcd
from polymat.structure import is_matroidal, is_polymatroidal, linear_relation_graph


def gens(I):
    return [str(g) for g in I.generators]


def test_veronese_examples():
    assert gens(veronese_type(VeroneseSpec(3, 2, (1, 1, 1)))) == ["x1*x2", "x1*x3", "x2*x3"]
    assert set(gens(veronese_type(VeroneseSpec(2, 2, (2, 2))))) == {"x1^2", "x1*x2", "x2^2"}
    assert len(squarefree_veronese(4, 2)) == 6


@pytest.mark.parametrize("d, caps", [(2, (2, 1)), (2, (0, 2)), (2, (3, 3)), (3, (1, 1)), (2, (1,))])
def test_veronese_spec_validation(d, caps):
    with pytest.raises(ValueError):
        VeroneseSpec(2, d, caps)


def test_veronese_types_are_polymatroidal():
    for n in range(1, 5):
        for d in (1, 2, 3):
            for caps in itertools.combinations_with_replacement(range(1, d + 1), n):
                if sum(caps) < d:
                    continue
                I = veronese_type(VeroneseSpec(n, d, caps))
                assert is_polymatroidal(I)
                if all(c == 1 for c in caps):
                    assert is_matroidal(I)


def test_almost_squarefree_veronese():
    assert len(almost_squarefree_veronese(4, 2, Monomial((0, 0, 1, 1)))) == 5
    assert len(almost_squarefree_veronese(5, 3, Monomial((0, 0, 1, 1, 1)))) == 9
    assert almost_squarefree_veronese(4, 2) == squarefree_veronese(4, 2)
    with pytest.raises(ValueError):
        almost_squarefree_veronese(4, 2, Monomial((2, 0, 0, 0)))


def test_product_of_primes():
    assert gens(product_of_primes([[1], [2, 3]])) == ["x1*x2", "x1*x3"]
    P = product_of_primes([[1, 2], [3, 4], [5, 6]])
    assert len(P) == 8 and P.degree == 3 and is_matroidal(P)
    assert linear_relation_graph(P).s == 3
    assert product_of_primes([[1, 2, 3]]) == MonomialIdeal.maximal(3)
    with pytest.raises(ValueError):
        product_of_primes([[1, 2], [2, 3]])


def test_transversal_allows_overlap():
    T = transversal([[1, 2], [2, 3]], 3)
    assert is_polymatroidal(T) and T.degree == 2


def brute_matroidal(n, d, normalized=True):
    pool = [Monomial.from_support(c, n) for c in itertools.combinations(range(1, n + 1), d)]
    out = set()
    for r in range(1, len(pool) + 1):
        for sub in itertools.combinations(pool, r):
            I = MonomialIdeal(n, sub)
            if not is_matroidal(I):
                continue
            _, g, full = support_and_gcd(I)
            if normalized and not (full and g.is_one()):
                continue
            out.add(I)
    return out


@pytest.mark.parametrize("n, d", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_exhaustive_enumeration_matches_subset_filter(n, d):
    got = list(enumerate_matroidal(n, d))
    assert len(got) == len(set(got))
    assert set(got) == brute_matroidal(n, d)


def test_unnormalized_enumeration_includes_gcd_ideals():
    got = set(enumerate_matroidal(3, 2, normalized=False))
    assert got == brute_matroidal(3, 2, normalized=False)
    full = MonomialIdeal(3, (Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1))))
    assert full in got
    assert MonomialIdeal(3, (Monomial((1, 1, 0)), Monomial((1, 0, 1)))) in got
    assert set(enumerate_matroidal(3, 2)) == {full}


def test_exhaustive_budget():
    assert comb(7, 3) > 20
    with pytest.raises(BudgetExceeded):
        list(enumerate_matroidal(7, 3))


def test_random_enumeration_is_reproducible_and_valid():
    a = list(enumerate_matroidal(7, 3, "random", seed=5, count=20))
    b = list(enumerate_matroidal(7, 3, "random", seed=5, count=20))
    assert a == b and len(set(a)) == 20
    for I in a:
        _, g, full = support_and_gcd(I)
        assert is_matroidal(I) and full and g.is_one()
