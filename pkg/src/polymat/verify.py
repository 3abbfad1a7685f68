"""Executable checks of stated implications over constructed and enumerated ideals.

Every check walks a corpus, evaluates one stated implication or equality on
each instance, and reports PASS / FAIL / INCONCLUSIVE together with
re-runnable witnesses. A check that saw no qualifying instance, or whose
stability indices were not certified under the configured power budget, is
INCONCLUSIVE, never PASS.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable

from .decomposition import (
    associated_primes,
    colon_witness,
    disjoint_prime_intersection,
    irreducible_decomposition,
    localized_on,
)
from .families import (
    VeroneseSpec,
    almost_squarefree_veronese,
    enumerate_matroidal,
    random_polymatroidal,
    transversal,
    veronese_type,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon,
    localize,
    normalize,
    permute,
    power,
    support_and_gcd,
)
from .stability import (
    DEFAULT_MAX_POWER,
    StabilityReport,
    linear_relation_witness,
    stability_report,
)
from .structure import is_matroidal, is_polymatroidal, linear_relation_graph
from .textio import format_ideal, parse_ideal

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"

THREE_PRIME_QUADRICS = """ring 6
# x, y, z, u, v, w = x1 .. x6
x1*x3, x1*x4, x1*x5, x1*x6, x2*x3, x2*x4, x2*x5, x2*x6, x3*x5, x3*x6, x4*x5, x4*x6
"""

ASTAB_ABOVE_DSTAB = """ring 4
x1*x2*x3, x2^2*x3, x2*x3^2, x1*x2*x4, x2^2*x4, x2*x4^2, x1*x3*x4, x3^2*x4, x3*x4^2, x2*x3*x4
"""

ALMOST_SQUAREFREE_TABLE = ((4, 2), (5, 2), (5, 3), (6, 3), (6, 4))
REGRESSIONS = ("ex-2.2", "ex-2.11")


@dataclass(frozen=True)
class SuiteConfig:
    max_power: int = DEFAULT_MAX_POWER
    seed: int = 2026
    random_count: int = 200
    random_n: int = 7
    exhaustive_max_n: int = 6
    thm_2_16_table: tuple[tuple[int, int], ...] = ALMOST_SQUAREFREE_TABLE
    only: tuple[str, ...] | None = None
    regressions_only: bool = False
    witness_dir: str | None = None
    max_witnesses: int = 5


@dataclass
class TheoremCheckResult:
    id: str
    statement: str
    corpus: str
    status: str = PASS
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "statement": self.statement,
            "corpus": self.corpus,
            "instances": self.instances,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "notes": self.notes,
            "elapsed": round(self.elapsed, 3),
        }


class _Tally:
    def __init__(self, config: SuiteConfig):
        self.config = config
        self.instances = 0
        self.inconclusive = 0
        self.failures: list[dict] = []
        self.witnesses: list[dict] = []
        self.notes: list[str] = []

    def report(self, I: MonomialIdeal) -> StabilityReport | None:
        r = stability_report(I, self.config.max_power)
        if not r.certified:
            self.inconclusive += 1
            return None
        return r

    def fail(self, I: MonomialIdeal, **invariants) -> None:
        self.failures.append({"ideal": format_ideal(I), "invariants": _jsonable(invariants)})

    def witness(self, I: MonomialIdeal, **data) -> None:
        if len(self.witnesses) < self.config.max_witnesses:
            self.witnesses.append({"ideal": format_ideal(I), **_jsonable(data)})

    def expect(self, ok: bool, I: MonomialIdeal, **invariants) -> None:
        self.instances += 1
        if not ok:
            self.fail(I, **invariants)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, MonomialPrime):
        return list(obj.vars)
    if isinstance(obj, Monomial):
        return str(obj)
    if isinstance(obj, MonomialIdeal):
        return str(obj)
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


class Corpus:
    """Lazily built, normalized (full-supported, gcd 1) test ideals."""

    def __init__(self, config: SuiteConfig):
        self.config = config

    def matroidal(self, d: int) -> list[MonomialIdeal]:
        out = []
        for n in range(max(d, 2), self.config.exhaustive_max_n + 1):
            if math.comb(n, d) <= 20:
                out.extend(enumerate_matroidal(n, d))
        return out

    @cached_property
    def matroidal_all(self) -> list[MonomialIdeal]:
        return [I for d in (2, 3, 4) for I in self.matroidal(d)]

    @cached_property
    def matroidal_random(self) -> list[MonomialIdeal]:
        c = self.config
        return list(enumerate_matroidal(c.random_n, 3, "random", seed=c.seed, count=c.random_count))

    @cached_property
    def polymatroidal(self) -> list[MonomialIdeal]:
        return polymatroidal_corpus(self.config.seed)

    def polymatroidal_of_degree(self, d: int) -> list[MonomialIdeal]:
        return [I for I in self.polymatroidal if I.degree == d]


def polymatroidal_corpus(seed: int = 2026, max_n: int = 5) -> list[MonomialIdeal]:
    """Veronese-type, transversal, random exchange-closed and small matroidal
    ideals, normalized and deduplicated."""
    found: dict[MonomialIdeal, None] = {}

    def add(I: MonomialIdeal) -> None:
        if len(I) < 2:
            return  # principal ideals normalize to the unit ideal
        J = normalize(I)
        if J.n >= 2:
            found.setdefault(J, None)

    for n in range(2, max_n + 1):
        for d in (2, 3):
            for caps in itertools.combinations_with_replacement(range(1, d + 1), n):
                if sum(caps) >= d:
                    add(veronese_type(VeroneseSpec(n, d, caps)))
    for n in range(2, 5):
        subsets = [s for r in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), r)]
        for d in (2, 3):
            for parts in itertools.combinations_with_replacement(subsets, d):
                add(transversal(parts, n))
    rng = random.Random(seed)
    for n in (4, 5):
        for d in (2, 3):
            for _ in range(25):
                add(random_polymatroidal(n, d, rng))
    for d in (2, 3):
        for n in range(d, max_n + 1):
            for I in enumerate_matroidal(n, d):
                add(I)
    add(parse_ideal(ASTAB_ABOVE_DSTAB))
    return list(found)


def single_variable_localizations(I: MonomialIdeal) -> Iterable[tuple[int, MonomialIdeal]]:
    """``(k, I(p_{k}))`` re-indexed into the n-1 remaining variables, skipping
    variables whose removal makes the localization the unit ideal."""
    for k in range(1, I.n + 1):
        L = localized_on(I, MonomialPrime.from_omitted([k], I.n))
        if L is not None:
            yield k, L


_CHECKS: dict[str, tuple[str, Callable[[SuiteConfig, Corpus, _Tally], str]]] = {}


def _check(check_id: str, statement: str):
    def register(fn):
        _CHECKS[check_id] = (statement, fn)
        return fn

    return register


@_check("thm-1.1", "matroidal, full-supported, gcd 1: s <= d; (V(Γ)=all and s=d) iff dstab=1; "
        "I ⊆ ∩ component primes; dstab=1 iff I is a product of primes on disjoint variable sets")
def _thm_1_1(config, corpus, tally):
    for I in corpus.matroidal_all:
        d = I.degree
        g = linear_relation_graph(I)
        r = tally.report(I)
        tally.expect(g.s <= d, I, s=g.s, d=d)
        comp_primes = [set(c) for c in g.components]
        tally.expect(all(g_.support & c for g_ in I.generators for c in comp_primes), I, components=g.components)
        if r is None:
            continue
        left = g.r == I.n and g.s == d
        tally.expect(left == (r.dstab == 1), I, vertices=g.r, s=g.s, d=d, dstab=r.dstab)
        factors = disjoint_prime_intersection(I)
        tally.expect((factors is not None) == (r.dstab == 1), I, factors=factors, dstab=r.dstab)
        if factors is not None:
            tally.witness(I, factors=factors)
    return "exhaustive matroidal ideals, d in {2,3,4}, n <= %d" % config.exhaustive_max_n


def _is_disjoint_prime_intersection(I: MonomialIdeal, count: int) -> list[MonomialPrime] | None:
    primes = disjoint_prime_intersection(I)
    if primes is None or len(primes) != count:
        return None
    return primes


@_check("lem-2.1", "polymatroidal d >= 3 whose every single-variable localization is an intersection "
        "of d-1 primes with disjoint generators is an intersection of d such primes; fails for d=2 (the ex-2.2 ideal)")
def _lem_2_1(config, corpus, tally):
    pool = {I: None for I in corpus.polymatroidal if I.degree >= 3}
    for d in (3, 4):
        pool.update({I: None for I in corpus.matroidal(d)})
    for I in pool:
        d = I.degree
        locs = list(single_variable_localizations(I))
        if len(locs) != I.n:
            continue
        if not all(_is_disjoint_prime_intersection(L, d - 1) for _, L in locs):
            continue
        primes = _is_disjoint_prime_intersection(I, d)
        tally.expect(primes is not None, I, d=d, ass=associated_primes(I))
        if primes is not None:
            tally.witness(I, primes=primes)
    ex = parse_ideal(THREE_PRIME_QUADRICS)
    hyp = all(_is_disjoint_prime_intersection(L, 1) for _, L in single_variable_localizations(ex))
    concl = _is_disjoint_prime_intersection(ex, 2) is not None
    tally.expect(hyp and not concl, ex, pinned="the ex-2.2 ideal must satisfy the d=2 hypothesis and violate the conclusion")
    tally.notes.append(f"d=2 counterexample pinned: hypothesis={hyp}, conclusion={concl}")
    return "polymatroidal corpus and exhaustive matroidal ideals with d in {3,4}, filtered by the hypothesis"


@_check("ex-2.2", "fixed 12-generator quadric ideal: Ass, three-prime intersection and single-variable localizations")
def _ex_2_2(config, corpus, tally):
    I = parse_ideal(THREE_PRIME_QUADRICS)
    x, y, z, u, v, w = range(1, 7)
    expected = {MonomialPrime((x, y, z, u)), MonomialPrime((z, u, v, w)), MonomialPrime((x, y, v, w))}
    tally.expect(is_matroidal(I) and I.degree == 2, I, matroidal=is_matroidal(I))
    ass = associated_primes(I)
    tally.expect(set(ass.primes) == expected, I, ass=ass)
    comps = irreducible_decomposition(I)
    tally.expect(all(a == 1 for c in comps for _, a in c.bounds) and {c.radical for c in comps} == expected,
                 I, components=[c.to_json() for c in comps])
    displayed = {
        x: (z, u, v, w), y: (z, u, v, w),
        z: (x, y, v, w), u: (x, y, v, w),
        v: (x, y, z, u), w: (x, y, z, u),
    }
    for k, gens in displayed.items():
        got = localize(I, MonomialPrime.from_omitted([k], 6))
        tally.expect(got == MonomialPrime(gens).as_ideal(6), I, variable=k, localization=got)
    tally.expect(_is_disjoint_prime_intersection(I, 2) is None, I, note="no two disjoint primes intersect to I")
    return "the fixed 12-generator ideal"


@_check("thm-2.3", "matroidal: astab=1 iff dstab=1, and then I is a product of primes on disjoint variable sets")
def _thm_2_3(config, corpus, tally):
    for I in corpus.matroidal_all:
        r = tally.report(I)
        if r is None:
            continue
        tally.expect((r.astab == 1) == (r.dstab == 1), I, astab=r.astab, dstab=r.dstab)
        if r.astab == 1:
            factors = disjoint_prime_intersection(I)
            tally.expect(factors is not None and len(factors) == I.degree, I, factors=factors)
    return "exhaustive matroidal ideals, d in {2,3,4}"


@_check("lem-2.4", "matroidal: every edge of Γ of a single-variable localization is an edge of Γ_I, "
        "and s(I(p_k)) >= s(I)")
def _lem_2_4(config, corpus, tally):
    drops = [0, 0, 0]
    for I in corpus.matroidal_all:
        g = linear_relation_graph(I)
        edges = set(g.edges)
        for k, L in single_variable_localizations(I):
            others = [i for i in range(1, I.n + 1) if i != k]
            gl = linear_relation_graph(L)
            lifted = {(others[a - 1], others[b - 1]) for a, b in gl.edges}
            tally.expect(lifted <= edges, I, k=k, extra_edges=sorted(lifted - edges))
            ok = gl.s >= g.s
            tally.expect(ok, I, k=k, s_local=gl.s, s=g.s)
            if not ok:
                full = all(any(u[i] for u in L.generators) for i in range(L.n))
                isolated = L.n - len(gl.vertices)
                drops[0] += 1
                drops[1] += not full
                drops[2] += gl.s + isolated >= g.s
    if drops[0]:
        tally.notes.append(
            f"{drops[0]} localizations with fewer components; {drops[1]} of them are not full-supported, "
            f"{drops[2]} recover s(I) once unused variables count as singleton components")
    return "exhaustive matroidal ideals, d in {2,3,4}, every variable"


@_check("prop-2.5", "polymatroidal of degree d with I(p_k) of degree d-1 whose maximal ideal is in "
        "its stable Ass set: then m ∈ Ass^∞(I)")
def _prop_2_5(config, corpus, tally):
    pool = {I: None for I in corpus.polymatroidal}
    pool.update({I: None for I in corpus.matroidal_all})
    for I in pool:
        for k, L in single_variable_localizations(I):
            if L.degree != I.degree - 1:
                continue
            rl = tally.report(L)
            if rl is None or not rl.stable_ass.contains_maximal:
                continue
            r = tally.report(I)
            if r is None:
                continue
            tally.expect(r.stable_ass.contains_maximal, I, k=k, stable_ass=r.stable_ass)
            tally.witness(I, k=k)
    return "polymatroidal corpus and exhaustive matroidal ideals, every variable"


@_check("lem-2.6", "matroidal of degree d > 1 with s(I) < d: some u, v, w in G(I) and x_i, x_j "
        "have x_i u = x_j v and x_i x_j | w")
def _lem_2_6(config, corpus, tally):
    for I in corpus.matroidal_all:
        if I.degree <= 1 or linear_relation_graph(I).s >= I.degree:
            continue
        found = linear_relation_witness(I)
        tally.expect(found is not None, I, s=linear_relation_graph(I).s)
        if found is not None:
            u, v, w, i, j = found
            tally.witness(I, u=u, v=v, w=w, i=i, j=j)
    return "exhaustive matroidal ideals with s < d"


@_check("prop-2.7", "matroidal with dstab > 1: depth R/I^2 < depth R/I")
def _prop_2_7(config, corpus, tally):
    for I in corpus.matroidal_all:
        r = tally.report(I)
        if r is None or r.dstab == 1:
            continue
        depths = [s.depth for s in r.trace.steps]
        tally.expect(len(depths) >= 2 and depths[1] < depths[0], I, depths=depths)
    return "exhaustive matroidal ideals with dstab > 1"


@_check("prop-2.8", "matroidal of degree 3 with m ∉ Ass^∞: astab = dstab <= 2")
def _prop_2_8(config, corpus, tally):
    worst = 0
    for I in corpus.matroidal(3) + corpus.matroidal_random:
        r = tally.report(I)
        if r is None or r.stable_ass.contains_maximal:
            continue
        tally.expect(r.astab == r.dstab and r.astab <= 2, I, astab=r.astab, dstab=r.dstab)
        worst = max(worst, r.astab)
    tally.notes.append(f"largest astab observed: {worst}")
    return "exhaustive and random matroidal ideals of degree 3 with m not stably associated"


@_check("lem-2.9", "polymatroidal of degree 2 with m ∈ Ass^∞: astab = dstab <= 2")
def _lem_2_9(config, corpus, tally):
    pool = {I: None for I in corpus.polymatroidal_of_degree(2)}
    pool.update({I: None for I in corpus.matroidal(2)})
    for I in pool:
        r = tally.report(I)
        if r is None or not r.stable_ass.contains_maximal:
            continue
        tally.expect(r.astab == r.dstab and r.astab <= 2, I, astab=r.astab, dstab=r.dstab)
    return "degree-2 polymatroidal corpus and exhaustive degree-2 matroidal ideals"


@_check("prop-2.10", "polymatroidal of degree 3 with m ∈ Ass^∞ \\ Ass(I): astab = dstab; "
        "the ex-2.11 ideal (m ∈ Ass(I)) is pinned as the case where equality fails")
def _prop_2_10(config, corpus, tally):
    pool = {I: None for I in corpus.polymatroidal_of_degree(3)}
    pool.update({I: None for I in corpus.matroidal(3)})
    for I in pool:
        r = tally.report(I)
        if r is None:
            continue
        first = r.trace.steps[0].ass
        if not r.stable_ass.contains_maximal or first.contains_maximal:
            continue
        tally.expect(r.astab == r.dstab, I, astab=r.astab, dstab=r.dstab)
    ex = parse_ideal(ASTAB_ABOVE_DSTAB)
    r = stability_report(ex, DEFAULT_MAX_POWER)
    tally.expect(r.trace.steps[0].ass.contains_maximal and r.astab != r.dstab, ex, astab=r.astab, dstab=r.dstab)
    return "degree-3 polymatroidal corpus and exhaustive degree-3 matroidal ideals"


@_check("ex-2.11", "fixed 10-generator cubic ideal: polymatroidal, m ∈ Ass(I), dstab = 1, astab = 2")
def _ex_2_11(config, corpus, tally):
    I = parse_ideal(ASTAB_ABOVE_DSTAB)
    r = stability_report(I, DEFAULT_MAX_POWER)
    tally.expect(bool(is_polymatroidal(I)) and I.degree == 3, I)
    tally.expect(associated_primes(I).contains_maximal, I, ass=associated_primes(I))
    tally.expect(r.certified and r.dstab == 1 and r.astab == 2, I, astab=r.astab, dstab=r.dstab)
    return "the fixed 10-generator ideal"


@_check("cor-2.13", "matroidal of degree 3: astab = dstab (m ∈ Ass^∞ instances counted separately)")
def _cor_2_13(config, corpus, tally):
    with_m = 0
    for I in corpus.matroidal(3) + corpus.matroidal_random:
        r = tally.report(I)
        if r is None:
            continue
        with_m += r.stable_ass.contains_maximal
        tally.expect(r.astab == r.dstab, I, astab=r.astab, dstab=r.dstab)
    tally.notes.append(f"instances with m in Ass^inf : {with_m}")
    return "exhaustive degree-3 matroidal ideals (n <= %d) plus %d random at n = %d" % (
        config.exhaustive_max_n, config.random_count, config.random_n)


@_check("prop-2.14", "polymatroidal of degree 3 with m ∉ Ass^∞: astab = dstab")
def _prop_2_14(config, corpus, tally):
    pool = {I: None for I in corpus.polymatroidal_of_degree(3)}
    pool.update({I: None for I in corpus.matroidal(3)})
    for I in pool:
        r = tally.report(I)
        if r is None or r.stable_ass.contains_maximal:
            continue
        tally.expect(r.astab == r.dstab, I, astab=r.astab, dstab=r.dstab)
    return "degree-3 polymatroidal corpus and exhaustive degree-3 matroidal ideals"


def _almost_squarefree_family(n_max: int):
    for n in range(3, n_max + 1):
        for d in range(2, n):
            yield n, d, None, almost_squarefree_veronese(n, d)
            for c in itertools.combinations(range(1, n + 1), d):
                omit = Monomial.from_support(c, n)
                yield n, d, omit, almost_squarefree_veronese(n, d, omit)


@_check("prop-2.15", "almost square-free Veronese of degree d >= 2 with gcd 1: m ∈ Ass^∞(J)")
def _prop_2_15(config, corpus, tally):
    for n, d, omit, J in _almost_squarefree_family(config.exhaustive_max_n):
        if not support_and_gcd(J)[1].is_one():
            continue
        r = tally.report(J)
        if r is None:
            continue
        tally.expect(r.stable_ass.contains_maximal, J, n=n, d=d, omit=omit)
    return "every almost square-free Veronese ideal with gcd 1, n <= %d" % config.exhaustive_max_n


def _to_standard_position(n: int, d: int, omit: Monomial) -> list[int]:
    """Permutation sending supp(omit) to x_{n-d+1}..x_n and the rest to x_1..x_{n-d}."""
    inside = sorted(omit.support)
    outside = [i for i in range(1, n + 1) if i not in omit.support]
    perm = [0] * n
    for k, i in enumerate(outside):
        perm[i - 1] = k + 1
    for k, i in enumerate(inside):
        perm[i - 1] = n - d + 1 + k
    return perm


def colon_identity(n: int, d: int, omit: Monomial) -> tuple[int, Monomial, MonomialIdeal]:
    """``(k, w, J'^k : w)`` with J' the relabeled almost square-free Veronese
    omitting u = x_{n-d+1}..x_n, k = ⌈(n-1)/(n-d)⌉ and w = u^{k-1} x_1..x_{d-1}."""
    k = math.ceil((n - 1) / (n - d))
    J = permute(almost_squarefree_veronese(n, d, omit), _to_standard_position(n, d, omit))
    u = Monomial.from_support(range(n - d + 1, n + 1), n)
    w = u ** (k - 1) * Monomial.from_support(range(1, d), n)
    return k, w, colon(power(J, k), w)


@_check("thm-2.16", "almost square-free Veronese J of degree d >= 2, gcd 1: "
        "astab(J) = dstab(J) = ceil((n-1)/(n-d)), with m ∈ Ass(J^k) shown by an explicit colon witness")
def _thm_2_16(config, corpus, tally):
    literal_failures = []
    for n, d in config.thm_2_16_table:
        k = math.ceil((n - 1) / (n - d))
        for c in itertools.combinations(range(1, n + 1), d):
            omit = Monomial.from_support(c, n)
            J = almost_squarefree_veronese(n, d, omit)
            if not support_and_gcd(J)[1].is_one():
                continue
            r = tally.report(J)
            if r is None:
                continue
            tally.expect(r.astab == k and r.dstab == k, J, n=n, d=d, k=k, astab=r.astab, dstab=r.dstab)
            Jk = power(J, k)
            w = colon_witness(Jk, MonomialPrime.maximal(n), min_degree=k * d - 1)
            tally.expect(w is not None, J, n=n, d=d, k=k, note="no monomial w with J^k : w = m")
            kk, w_lit, got = colon_identity(n, d, omit)
            if got != MonomialIdeal.maximal(n) and (n, d) not in [f[:2] for f in literal_failures]:
                literal_failures.append((n, d, str(w_lit), str(got)))
            if w is not None:
                tally.witness(J, n=n, d=d, k=k, colon_by=w)
    for n, d, w, got in literal_failures:
        tally.notes.append(f"(n,d)=({n},{d}): literal proof identity J^k : {w} = {got}, not m")
    return "(n,d) in %s, every omissible generator" % (list(config.thm_2_16_table),)


CHECK_IDS = tuple(_CHECKS)


def check(check_id: str, config: SuiteConfig | None = None, corpus: Corpus | None = None) -> TheoremCheckResult:
    config = config or SuiteConfig()
    corpus = corpus or Corpus(config)
    statement, fn = _CHECKS[check_id]
    tally = _Tally(config)
    start = time.perf_counter()
    description = fn(config, corpus, tally)
    result = TheoremCheckResult(check_id, statement, description)
    result.instances = tally.instances
    result.failures = tally.failures
    result.witnesses = tally.witnesses
    result.notes = tally.notes
    if tally.inconclusive:
        result.notes.append(f"{tally.inconclusive} instance(s) not certified under max_power={config.max_power}")
    if tally.failures:
        result.status = FAIL
    elif tally.inconclusive or tally.instances == 0:
        result.status = INCONCLUSIVE
    result.elapsed = time.perf_counter() - start
    if config.witness_dir and result.failures:
        _write_witnesses(result, Path(config.witness_dir))
    return result


def _write_witnesses(result: TheoremCheckResult, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for k, f in enumerate(result.failures):
        header = f"# {result.id} failure {k}: {json.dumps(f['invariants'])}\n"
        (directory / f"{result.id}-{k}.txt").write_text(header + f["ideal"])


def selected_ids(config: SuiteConfig) -> list[str]:
    ids = list(REGRESSIONS) if config.regressions_only else list(CHECK_IDS)
    if config.only:
        unknown = set(config.only) - set(CHECK_IDS)
        if unknown:
            raise ValueError(f"unknown check ids: {sorted(unknown)}")
        ids = [i for i in ids if i in config.only]
    return ids


def _run_one(args) -> TheoremCheckResult:
    check_id, config = args
    return check(check_id, config)


def run_suite(config: SuiteConfig | None = None) -> list[TheoremCheckResult]:
    """Run the selected checks; results come back in check-id order."""
    config = config or SuiteConfig()
    ids = selected_ids(config)
    workers = int(os.environ.get("POLYMAT_THREADS", "1") or 1)
    if workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, [(i, config) for i in ids]))
    corpus = Corpus(config)
    return [check(i, config, corpus) for i in ids]


def suite_exit_status(results: list[TheoremCheckResult]) -> int:
    return 1 if any(r.status == FAIL for r in results) else 0


def format_table(results: list[TheoremCheckResult]) -> str:
    rows = [("check", "status", "instances", "seconds")]
    rows += [(r.id, r.status, str(r.instances), f"{r.elapsed:.2f}") for r in results]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    for r in results:
        for note in r.notes:
            lines.append(f"  {r.id}: {note}")
        for f in r.failures[:3]:
            lines.append(f"  {r.id} FAIL: {f['invariants']} :: {f['ideal'].strip()}")
    return "\n".join(lines)


def suite_json(results: list[TheoremCheckResult]) -> dict:
    return {"checks": [r.to_json() for r in results]}
