import math


from polymat.families import almost_squarefree_veronese, product_of_primes, squarefree_veronese
from polymat.monomial import Monomial, MonomialIdeal, MonomialPrime
from polymat.stability import (
    UNSTABILIZED,
    astab,
    dstab,
    linear_relation_witness,
    polymatroidal_power_steps,
    power_trace,
    stability_report,
)
from polymat.structure import analytic_spread
from polymat.textio import parse_ideal
from polymat.verify import ASTAB_ABOVE_DSTAB


def test_maximal_ideal_trace():
    trace = power_trace(MonomialIdeal.maximal(4), 3)
    assert [s.depth for s in trace.steps] == [0, 0, 0]
    assert all(s.ass.primes == {MonomialPrime.maximal(4)} for s in trace.steps)


def test_squarefree_veronese_trace():
    r = stability_report(squarefree_veronese(4, 2))
    assert [s.depth for s in r.trace.steps] == [1, 0, 0]
    assert r.dstab == 2 and r.astab == 2 and r.certified


def test_example_2_11_trace():
    r = stability_report(parse_ideal(ASTAB_ABOVE_DSTAB))
    first, second = r.trace.steps[0].ass, r.trace.steps[1].ass
    assert first.primes < second.primes
    assert second == r.stable_ass
    assert len({s.depth for s in r.trace.steps}) == 1
    assert (r.astab, r.dstab) == (2, 1)


def test_examples_from_families():
    assert astab(product_of_primes([[1, 2], [3, 4], [5, 6]])) == 1
    assert dstab(product_of_primes([[1, 2], [3, 4], [5, 6]])) == 1
    J = almost_squarefree_veronese(5, 3, Monomial((0, 0, 1, 1, 1)))
    assert astab(J) == dstab(J) == math.ceil(4 / 2)


def test_report_json_schema():
    data = stability_report(squarefree_veronese(4, 2)).to_json()
    assert set(data) == {"astab", "dstab", "certified", "ell", "trace"}
    assert data["ell"] == 4
    assert set(data["trace"][0]) == {"t", "ass", "depth", "gens"}


def test_uncertified_budget_behaviour():
    r = stability_report(squarefree_veronese(5, 2), max_power=1)
    assert not r.certified
    assert r.astab == UNSTABILIZED and r.dstab == UNSTABILIZED
    assert r.label == "budget-stable"


def test_non_polymatroidal_trace_uses_general_route():
    I = MonomialIdeal(2, (Monomial((2, 0)), Monomial((0, 2))))
    r = stability_report(I, max_power=3)
    assert not r.trace.polymatroidal and not r.certified
    assert r.astab == 1 and r.dstab == 1
    assert all(s.depth == 0 for s in r.trace.steps)


def test_general_route_agrees_with_polymatroidal_route(small_poly_corpus):
    from polymat.stability import _general_step
    from polymat.monomial import power

    for I in small_poly_corpus[:25]:
        fast = polymatroidal_power_steps(I, 2)
        for t in (1, 2):
            slow, _ = _general_step(power(I, t), t, 300)
            assert slow.ass == fast[t - 1].ass, (I, t)
            assert slow.depth == fast[t - 1].depth, (I, t)


def test_persistence_and_depth_monotonicity(poly_corpus):
    for I in poly_corpus:
        steps = polymatroidal_power_steps(I, 5)
        for a, b in zip(steps, steps[1:]):
            assert a.ass <= b.ass, I
            assert b.depth <= a.depth, I


def test_indices_below_analytic_spread(poly_corpus):
    for I in poly_corpus:
        r = stability_report(I)
        ell = analytic_spread(I)
        assert r.certified
        assert r.astab < ell and r.dstab < ell, I


def test_linear_relation_witness():
    I = squarefree_veronese(4, 2)
    u, v, w, i, j = linear_relation_witness(I)
    xi, xj = Monomial.var(i, 4), Monomial.var(j, 4)
    assert xi * u == xj * v and (xi * xj).divides(w)
    assert linear_relation_witness(product_of_primes([[1, 2], [3, 4]])) is None
