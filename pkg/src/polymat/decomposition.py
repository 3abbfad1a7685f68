"""Associated primes of R/I: irreducible decomposition, a brute-force colon
oracle, and a localization-based fast path for polymatroidal ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import prod

from . import _kernel
from .errors import BudgetExceeded, NotPolymatroidalError, UnitIdealError, ZeroIdealError
from .monomial import Monomial, MonomialIdeal, MonomialPrime, colon, localize, restrict
from .structure import is_polymatroidal

DEFAULT_MEMO_SIZE = 100_000
DEFAULT_COLON_BUDGET = 20_000


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """``(x_i^{a_i} : i in bounds)`` with 1-based variable keys."""

    bounds: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.bounds:
            raise ValueError("an irreducible component needs at least one bound")
        object.__setattr__(self, "bounds", tuple(sorted(self.bounds)))

    @property
    def radical(self) -> MonomialPrime:
        return MonomialPrime(tuple(v for v, _ in self.bounds))

    def contains(self, m) -> bool:
        return any(m[v - 1] >= a for v, a in self.bounds)

    def contains_component(self, other: IrreducibleComponent) -> bool:
        """``other ⊆ self``."""
        mine = dict(self.bounds)
        return all(v in mine and mine[v] <= a for v, a in other.bounds)

    def as_ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal(n, tuple(Monomial.var(v, n, a) for v, a in self.bounds))

    def to_json(self) -> dict:
        return {"bounds": {str(v): a for v, a in self.bounds}}


@dataclass(frozen=True)
class AssociatedPrimesSet:
    n: int
    primes: frozenset[MonomialPrime]

    @property
    def contains_maximal(self) -> bool:
        return MonomialPrime.maximal(self.n) in self.primes

    def sorted(self) -> list[MonomialPrime]:
        return sorted(self.primes, key=lambda p: (len(p), p.vars))

    def __contains__(self, p: MonomialPrime) -> bool:
        return p in self.primes

    def __len__(self) -> int:
        return len(self.primes)

    def __le__(self, other: AssociatedPrimesSet) -> bool:
        return self.primes <= other.primes

    def to_json(self) -> list[list[int]]:
        return [list(p.vars) for p in self.sorted()]

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.sorted()) + "}"


def _split(I: MonomialIdeal) -> list[IrreducibleComponent]:
    for g in I.generators:
        supp = sorted(g.support)
        if len(supp) >= 2:
            k = supp[-1]
            pure = Monomial.var(k, I.n, g[k - 1])
            rest = g.divide(pure)
            left = MonomialIdeal(I.n, I.generators + (pure,))
            right = MonomialIdeal(I.n, I.generators + (rest,))
            return _decompose(left) + _decompose(right)
    return [IrreducibleComponent(tuple((min(g.support), g.degree) for g in I.generators))]


@lru_cache(maxsize=DEFAULT_MEMO_SIZE)
def _decompose(I: MonomialIdeal) -> list[IrreducibleComponent]:
    return _split(I)


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible components of I, in a deterministic order.

    Splits the first generator (canonical order) with two or more support
    variables on its highest-index variable power versus the rest; redundant
    components are pruned after full expansion.
    """
    if I.is_zero():
        raise ZeroIdealError("decomposition of the zero ideal")
    comps = sorted(set(_decompose(I)))
    kept = [
        c for c in comps
        if not any(o != c and c.contains_component(o) for o in comps)
    ]
    return kept


def intersection(components: list[IrreducibleComponent], n: int) -> MonomialIdeal:
    """Intersection of irreducible components as a monomial ideal (lcm of generator choices)."""
    ideals = [c.as_ideal(n) for c in components]

    def meet(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(n, tuple(u.lcm(v) for u in I.generators for v in J.generators))

    return reduce(meet, ideals)


def associated_primes(I: MonomialIdeal) -> AssociatedPrimesSet:
    return AssociatedPrimesSet(I.n, frozenset(c.radical for c in irreducible_decomposition(I)))


def ass_colon_oracle(I: MonomialIdeal, budget: int = DEFAULT_COLON_BUDGET) -> AssociatedPrimesSet:
    """Brute force: collect every prime of the form ``I : u``.

    Only ``u`` dividing lcm(G(I)) matter, since ``I : u = I : gcd(u, lcm)``.
    """
    if I.is_zero():
        raise ZeroIdealError("associated primes of the zero ideal")
    top = I.lcm()
    count = prod(e + 1 for e in top)
    if count > budget:
        raise BudgetExceeded("lcm divisors", count, budget)
    primes = set()
    for exps in itertools.product(*(range(e + 1) for e in top)):
        u = Monomial(exps)
        if u in I:
            continue
        J = colon(I, u)
        if all(g.degree == 1 for g in J.generators):
            primes.add(MonomialPrime(tuple(min(g.support) for g in J.generators)))
    return AssociatedPrimesSet(I.n, frozenset(primes))


def localized_on(I: MonomialIdeal, p: MonomialPrime) -> MonomialIdeal | None:
    """I(p) re-indexed into the ring on p's variables, or None when p does not
    contain I (the localization is then the unit ideal)."""
    if not p.contains(I):
        return None
    return restrict(localize(I, p), p.vars)


def candidate_primes(I: MonomialIdeal):
    """Primes p ⊇ I whose localization I(p) involves every variable of p.

    Any associated prime has this shape: otherwise some variable of p is a
    nonzerodivisor on the localization.
    """
    n = I.n
    for size in range(1, n + 1):
        for vs in itertools.combinations(range(1, n + 1), size):
            p = MonomialPrime(vs)
            L = localized_on(I, p)
            if L is None:
                continue
            full = all(any(g[k] for g in L.generators) for k in range(size))
            if full:
                yield p, L


def ass_polymatroidal_fast(I: MonomialIdeal) -> AssociatedPrimesSet:
    """Associated primes of a polymatroidal ideal via depth-zero tests.

    p is associated iff depth K[p]/I(p) = 0, i.e. q(I(p)) = |p| - 1, where
    I(p) is again polymatroidal and so has linear quotients.
    """
    if I.is_zero():
        raise ZeroIdealError("associated primes of the zero ideal")
    if not is_polymatroidal(I):
        raise NotPolymatroidalError(f"fast path needs a polymatroidal ideal: {I}")
    primes = set()
    for p, L in candidate_primes(I):
        base = max(max(g) for g in L.generators) + 2
        if _kernel.polymatroidal_q(_kernel.Packed.from_exponents(L.generators, base)) == len(p) - 1:
            primes.add(p)
    return AssociatedPrimesSet(I.n, frozenset(primes))


def is_intersection_of(I: MonomialIdeal, components: list[IrreducibleComponent]) -> bool:
    """Check ``I = ∩ components`` by divisibility in both directions."""
    try:
        J = intersection(components, I.n)
    except UnitIdealError:
        return False
    return J == I


def disjoint_prime_intersection(I: MonomialIdeal) -> list[MonomialPrime] | None:
    """Primes p_1..p_s on pairwise disjoint variable sets with I = p_1 ∩ ... ∩ p_s
    (equivalently I = p_1 ... p_s), or None when I has no such form."""
    comps = irreducible_decomposition(I)
    if any(a != 1 for c in comps for _, a in c.bounds):
        return None
    primes = [c.radical for c in comps]
    seen: set[int] = set()
    for p in primes:
        if seen & set(p.vars):
            return None
        seen |= set(p.vars)
    return sorted(primes)


def colon_witness(I: MonomialIdeal, target: MonomialPrime, min_degree: int = 0,
                  budget: int = DEFAULT_COLON_BUDGET) -> Monomial | None:
    """Some monomial u with ``I : u = target``, searched over divisors of lcm(G(I))
    of degree at least ``min_degree``, lowest degree first."""
    top = I.lcm()
    count = prod(e + 1 for e in top)
    if count > budget:
        raise BudgetExceeded("lcm divisors", count, budget)
    want = target.as_ideal(I.n)
    divisors = sorted(
        (Monomial(e) for e in itertools.product(*(range(a + 1) for a in top)) if sum(e) >= min_degree),
        key=Monomial.revlex_key,
    )
    for u in divisors:
        if u in I:
            continue
        if colon(I, u) == want:
            return u
    return None
