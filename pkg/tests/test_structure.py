import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import brute_exchange, ideals
from polymat.errors import NoLinearQuotients, NotPolymatroidalError, ZeroIdealError
from polymat.families import random_polymatroidal, squarefree_veronese
from polymat.monomial import Monomial, MonomialIdeal, MonomialPrime, colon, localize
from polymat.structure import (
    analytic_spread,
    depth_polymatroidal,
    is_matroidal,
    is_polymatroidal,
    linear_quotients_q,
    linear_relation_graph,
    q_polymatroidal,
)
from polymat.textio import parse_ideal
from polymat.verify import THREE_PRIME_QUADRICS, ASTAB_ABOVE_DSTAB


def ideal(n, *gens):
    return MonomialIdeal(n, tuple(Monomial(g) for g in gens))


def maximal(n):
    return MonomialIdeal.maximal(n)


def test_exchange_examples():
    assert is_polymatroidal(ideal(2, (2, 0), (1, 1), (0, 2)))
    check = is_polymatroidal(ideal(2, (2, 0), (0, 2)))
    assert not check
    assert check.witness == (Monomial((2, 0)), Monomial((0, 2)), 1)
    assert is_polymatroidal(parse_ideal(ASTAB_ABOVE_DSTAB))
    with pytest.raises(ZeroIdealError):
        is_polymatroidal(MonomialIdeal.zero(2))


def test_matroidal_examples():
    assert is_matroidal(parse_ideal(THREE_PRIME_QUADRICS))
    assert not is_matroidal(ideal(2, (2, 0), (1, 1), (0, 2)))
    assert is_matroidal(ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1)))


def test_mixed_degrees_are_not_polymatroidal():
    assert not is_polymatroidal(ideal(2, (1, 0), (0, 2)))


@given(ideals(max_n=3, max_exp=2, max_gens=6))
def test_exchange_matches_axiom_oracle(I):
    expected = I.is_equigenerated() and brute_exchange(I)
    assert bool(is_polymatroidal(I)) == expected


def test_exchange_exhaustive_on_small_degree_two_families():
    n = 3
    pool = [Monomial(e) for e in itertools.product(range(3), repeat=n) if sum(e) == 2]
    for r in range(1, len(pool) + 1):
        for gens in itertools.combinations(pool, r):
            I = MonomialIdeal(n, gens)
            assert bool(is_polymatroidal(I)) == brute_exchange(I)


def brute_graph(I):
    g = nx.Graph()
    for u, v in itertools.product(I.generators, repeat=2):
        for i, j in itertools.permutations(range(I.n), 2):
            if u * Monomial.var(i + 1, I.n) == v * Monomial.var(j + 1, I.n):
                g.add_edge(i + 1, j + 1)
    return g


def test_graph_examples():
    g = linear_relation_graph(ideal(3, (1, 1, 0), (1, 0, 1)))
    assert g.vertices == (2, 3) and g.edges == ((2, 3),) and g.s == 1
    g = linear_relation_graph(maximal(4))
    assert len(g.edges) == 6 and g.s == 1
    assert g.to_json()["components"] == [[1, 2, 3, 4]]


def test_graph_example_2_2_against_pair_scan():
    I = parse_ideal(THREE_PRIME_QUADRICS)
    g = linear_relation_graph(I)
    oracle = brute_graph(I)
    assert set(g.edges) == {tuple(sorted(e)) for e in oracle.edges}
    assert g.s == nx.number_connected_components(oracle)
    assert analytic_spread(I) == g.r - g.s + 1 == 6


@given(ideals(max_n=4, max_exp=2, max_gens=6))
def test_graph_matches_pair_scan(I):
    g = linear_relation_graph(I)
    oracle = brute_graph(I)
    assert set(g.edges) == {tuple(sorted(e)) for e in oracle.edges}
    assert set(g.vertices) == set(oracle.nodes)
    assert g.s == nx.number_connected_components(oracle)


def test_analytic_spread_examples():
    assert analytic_spread(maximal(5)) == 5
    assert analytic_spread(ideal(3, (1, 1, 0), (1, 0, 1))) == 2
    assert analytic_spread(squarefree_veronese(4, 2)) == 4
    with pytest.raises(NotPolymatroidalError):
        analytic_spread(ideal(2, (2, 0), (0, 2)))


def test_linear_quotients_examples():
    r = linear_quotients_q(ideal(2, (2, 0), (1, 1), (0, 2)))
    assert r.q_values == (1, 1) and r.q == 1 and r.linear
    r = linear_quotients_q(ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1)))
    assert r.linear and r.q == 1  # colons (x1x2):x1x3 = (x2), (x1x2,x1x3):x2x3 = (x1)
    r = linear_quotients_q(ideal(4, (1, 0, 1, 0), (0, 1, 0, 1)))
    assert not r.linear
    with pytest.raises(NoLinearQuotients):
        depth_polymatroidal(ideal(4, (1, 0, 1, 0), (0, 1, 0, 1)))


def test_depth_examples():
    assert depth_polymatroidal(maximal(4)) == 0
    assert depth_polymatroidal(parse_ideal(ASTAB_ABOVE_DSTAB)) == 0
    assert depth_polymatroidal(parse_ideal(THREE_PRIME_QUADRICS)) == 1


def test_fast_q_matches_colon_route(poly_corpus):
    for I in poly_corpus:
        report = linear_quotients_q(I)
        assert report.linear, I
        assert q_polymatroidal(I) == report.q, I


def test_q_independent_of_order_when_linear(poly_corpus):
    both = 0
    for I in poly_corpus[:300]:
        a, b = linear_quotients_q(I, "revlex"), linear_quotients_q(I, "lex")
        if a.linear and b.linear:
            both += 1
            assert a.q == b.q, I
    assert both > 0


def test_colon_and_localization_stay_polymatroidal(poly_corpus):
    rng = random.Random(3)
    for I in rng.sample(poly_corpus, 150):
        u = Monomial(rng.randint(0, 1) for _ in range(I.n))
        if u not in I:
            assert is_polymatroidal(colon(I, u)), (I, u)
        vs = tuple(sorted(rng.sample(range(1, I.n + 1), rng.randint(1, I.n))))
        p = MonomialPrime(vs)
        if p.contains(I):
            assert is_polymatroidal(localize(I, p)), (I, p)


def test_matroidal_depth_and_component_bound(poly_corpus):
    from polymat.monomial import support_and_gcd

    seen = 0
    for I in poly_corpus:
        if not is_matroidal(I):
            continue
        _, g, full = support_and_gcd(I)
        if full and g.is_one():
            seen += 1
            assert depth_polymatroidal(I) == I.degree - 1, I
            assert linear_relation_graph(I).s <= I.degree, I
    assert seen > 100


def test_random_polymatroidal_is_polymatroidal():
    rng = random.Random(11)
    for _ in range(30):
        assert is_polymatroidal(random_polymatroidal(4, 3, rng))
