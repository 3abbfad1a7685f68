"""Constructors and enumerators for Veronese-type, transversal and matroidal ideals."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import BudgetExceeded
from .monomial import Monomial, MonomialIdeal, multiply, support_and_gcd
from .structure import is_polymatroidal

EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class VeroneseSpec:
    n: int
    d: int
    caps: tuple[int, ...]

    def __post_init__(self):
        caps = tuple(int(a) for a in self.caps)
        object.__setattr__(self, "caps", caps)
        if len(caps) != self.n:
            raise ValueError(f"need {self.n} caps, got {len(caps)}")
        if self.d < 1:
            raise ValueError("degree must be >= 1")
        if any(not 1 <= a <= self.d for a in caps):
            raise ValueError(f"caps must lie in [1, {self.d}]: {caps}")
        if list(caps) != sorted(caps):
            raise ValueError(f"caps must be ascending: {caps}")
        if sum(caps) < self.d:
            raise ValueError(f"caps {caps} admit no monomial of degree {self.d}")


def _bounded_compositions(d: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if d == 0:
            yield ()
        return
    for e in range(min(d, caps[0]), -1, -1):
        for rest in _bounded_compositions(d - e, caps[1:]):
            yield (e,) + rest


def veronese_type(spec: VeroneseSpec) -> MonomialIdeal:
    """All degree-d monomials with exponent of x_j at most caps[j]."""
    return MonomialIdeal(spec.n, tuple(Monomial(e) for e in _bounded_compositions(spec.d, spec.caps)))


def squarefree_veronese(n: int, d: int) -> MonomialIdeal:
    return veronese_type(VeroneseSpec(n, d, (1,) * n))


def almost_squarefree_veronese(n: int, d: int, omit: Sequence[int] | None = None) -> MonomialIdeal:
    """I_{d;n} with the square-free generator ``omit`` removed (or nothing removed)."""
    full = squarefree_veronese(n, d)
    if omit is None:
        return full
    omit = Monomial(omit)
    if omit not in set(full.generators):
        raise ValueError(f"{omit} is not a generator of I_({d};{n})")
    return MonomialIdeal(n, tuple(g for g in full.generators if g != omit))


def _prime(part: Sequence[int], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(Monomial.var(i, n) for i in part))


def transversal(parts: Sequence[Sequence[int]], n: int) -> MonomialIdeal:
    """Product of the monomial primes on the given (possibly overlapping) variable sets."""
    if not parts or any(not p for p in parts):
        raise ValueError("need at least one nonempty part")
    result = _prime(parts[0], n)
    for p in parts[1:]:
        result = multiply(result, _prime(p, n))
    return result


def product_of_primes(parts: Sequence[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Product of primes on pairwise disjoint variable sets (1-based)."""
    seen: set[int] = set()
    for p in parts:
        if seen & set(p):
            raise ValueError(f"parts overlap: {parts}")
        seen |= set(p)
    if n is None:
        n = max(seen)
    return transversal(parts, n)


def _is_full_with_gcd_one(I: MonomialIdeal) -> bool:
    _, g, full = support_and_gcd(I)
    return full and g.is_one()


def _matroid_families(n: int, d: int) -> Iterator[list[int]]:
    """Backtracking over the d-subsets (as bitmasks, lex order) deciding
    membership one at a time; a branch dies once some basis pair has lost
    every possible exchange partner."""
    cands = [sum(1 << i for i in c) for c in itertools.combinations(range(n), d)]
    position = {m: k for k, m in enumerate(cands)}
    state = [None] * len(cands)  # True / False / None (undecided)

    def viable(a: int, b: int) -> bool:
        for e in range(n):
            if not (a >> e) & 1 or (b >> e) & 1:
                continue
            ok = False
            for f in range(n):
                if (b >> f) & 1 and not (a >> f) & 1:
                    if state[position[(a & ~(1 << e)) | (1 << f)]] is not False:
                        ok = True
                        break
            if not ok:
                return False
        return True

    def consistent() -> bool:
        chosen = [m for m, s in zip(cands, state) if s]
        return all(viable(a, b) for a in chosen for b in chosen if a != b)

    def walk(k: int) -> Iterator[list[int]]:
        if k == len(cands):
            chosen = [m for m, s in zip(cands, state) if s]
            if chosen:
                yield chosen
            return
        for choice in (True, False):
            state[k] = choice
            if consistent():
                yield from walk(k + 1)
        state[k] = None

    yield from walk(0)


def _mask_ideal(masks: Sequence[int], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(Monomial((m >> i) & 1 for i in range(n)) for m in masks))


def _repair(gens: set[Monomial], n: int, rng: random.Random, caps: Sequence[int] | None = None) -> set[Monomial]:
    """Add exchange-forced monomials until the set satisfies the exchange property."""
    while True:
        I = MonomialIdeal(n, tuple(gens))
        check = is_polymatroidal(I)
        if check:
            return gens
        u, v, i = check.witness
        choices = [j for j in range(n) if u[j] < v[j]]
        j = rng.choice(choices)
        w = list(u)
        w[i - 1] -= 1
        w[j] += 1
        if caps is not None and w[j] > caps[j]:
            w[j] -= 1
            w[i - 1] += 1
            raise ValueError("repair left the cap box")
        gens.add(Monomial(w))


def enumerate_matroidal(
    n: int,
    d: int,
    mode: str = "exhaustive",
    seed: int = 0,
    count: int = 100,
    max_attempts: int | None = None,
    normalized: bool = True,
) -> Iterator[MonomialIdeal]:
    """Full-supported, gcd-1 matroidal ideals of degree d in n variables
    (every matroidal ideal when ``normalized`` is False).

    ``exhaustive`` yields every one (identical generator sets deduplicated,
    not isomorphism classes) and is refused when C(n, d) exceeds 20.
    ``random`` draws ``count`` distinct ones reproducibly from ``seed`` by
    repairing a random starting set toward the exchange property.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    if mode == "exhaustive":
        size = comb(n, d)
        if size > EXHAUSTIVE_LIMIT:
            raise BudgetExceeded("exhaustive matroid search space C(n,d)", size, EXHAUSTIVE_LIMIT)
        for masks in _matroid_families(n, d):
            I = _mask_ideal(masks, n)
            if not normalized or _is_full_with_gcd_one(I):
                yield I
    elif mode == "random":
        rng = random.Random(seed)
        subsets = [Monomial.from_support(c, n) for c in itertools.combinations(range(1, n + 1), d)]
        seen: set[MonomialIdeal] = set()
        attempts = 0
        limit = max_attempts if max_attempts is not None else 200 * count
        while len(seen) < count and attempts < limit:
            attempts += 1
            start = set(rng.sample(subsets, rng.randint(1, min(3, len(subsets)))))
            I = MonomialIdeal(n, tuple(_repair(start, n, rng)))
            if I in seen or (normalized and not _is_full_with_gcd_one(I)):
                continue
            seen.add(I)
            yield I
    else:
        raise ValueError(f"unknown mode {mode!r}")


def random_polymatroidal(n: int, d: int, rng: random.Random, caps: Sequence[int] | None = None) -> MonomialIdeal:
    """A polymatroidal ideal of degree d grown from a few random monomials
    (optionally with exponent caps) by exchange repair."""
    if caps is None:
        caps = (d,) * n
    pool = [Monomial(e) for e in _bounded_compositions(d, caps)]
    while True:
        start = set(rng.sample(pool, rng.randint(1, min(3, len(pool)))))
        try:
            return MonomialIdeal(n, tuple(_repair(start, n, rng, caps)))
        except ValueError:
            continue
