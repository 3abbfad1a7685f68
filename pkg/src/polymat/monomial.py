"""Monomials, monomial ideals and monomial primes.

Exponent vectors are 0-indexed tuples; every *variable label* exposed to
callers (supports, prime generators, graph vertices) is 1-based, matching the
``x1 .. xn`` naming of the text format.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

from .errors import DimensionMismatch, UnitIdealError, ZeroIdealError


class Monomial(tuple):
    """Exponent vector of a monomial ``x1^e1 * ... * xn^en``."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple.__new__(cls, map(operator.index, exponents))
        if any(e < 0 for e in exps):
            raise ValueError(f"exponents must be nonnegative, got {tuple(exps)!r}")
        return exps

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> Monomial:
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside ring of dimension {n}")
        return cls(power if k == i - 1 else 0 for k in range(n))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> Monomial:
        """Square-free monomial on the given 1-based variables."""
        s = set(support)
        return cls(1 if k + 1 in s else 0 for k in range(n))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self) if e)

    def is_one(self) -> bool:
        return not any(self)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def divides(self, other: Sequence[int]) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def _check(self, other: Sequence[int]) -> None:
        if len(self) != len(other):
            raise DimensionMismatch(f"monomials of lengths {len(self)} and {len(other)}")

    def __mul__(self, other: Sequence[int]) -> Monomial:
        self._check(other)
        return Monomial(a + b for a, b in zip(self, other))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(a * k for a in self)

    def gcd(self, other: Sequence[int]) -> Monomial:
        self._check(other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def lcm(self, other: Sequence[int]) -> Monomial:
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def quotient(self, other: Sequence[int]) -> Monomial:
        """``self / gcd(self, other)``, the generator ``self`` contributes to a colon by ``other``."""
        self._check(other)
        return Monomial(a - b if a > b else 0 for a, b in zip(self, other))

    def divide(self, other: Sequence[int]) -> Monomial:
        """Exact division; ``other`` must divide ``self``."""
        self._check(other)
        if not Monomial.divides(other, self):
            raise ValueError(f"{Monomial(other)} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def revlex_key(self) -> tuple:
        """Sort key giving degree-ascending, then reverse-lexicographically
        *descending* order (x1 > x2 > ... > xn)."""
        return (sum(self), self[::-1])

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for i, e in enumerate(self):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r}, n={len(self)})"


def _canonical(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(gens, key=Monomial.revlex_key))


def _minimal_elements(gens: set[Monomial]) -> list[Monomial]:
    degrees = {g.degree for g in gens}
    if len(degrees) <= 1:
        return list(gens)
    kept: list[Monomial] = []
    for g in sorted(gens, key=Monomial.revlex_key):
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``K[x1..xn]`` stored by its minimal generators G(I).

    Construction always minimalizes and sorts, so equality is canonical-form
    equality. The unit ideal cannot be represented.
    """

    n: int
    generators: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        gens = set()
        for g in self.generators:
            m = g if isinstance(g, Monomial) else Monomial(g)
            if len(m) != self.n:
                raise DimensionMismatch(f"generator {tuple(m)} has length {len(m)}, ring has {self.n}")
            if m.is_one():
                raise UnitIdealError("the unit ideal is not representable")
            gens.add(m)
        object.__setattr__(self, "generators", _canonical(_minimal_elements(gens)))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def maximal(cls, n: int) -> MonomialIdeal:
        return cls(n, tuple(Monomial.var(i, n) for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def degrees(self) -> list[int]:
        return sorted({g.degree for g in self.generators})

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    @property
    def degree(self) -> int:
        """Generation degree; only defined for equigenerated ideals."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"ideal is not generated in a single degree: {degs}")
        return degs[0]

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def __contains__(self, m: Sequence[int]) -> bool:
        return any(g.divides(m) for g in self.generators)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(g in self for g in other.generators)

    def lcm(self) -> Monomial:
        if not self.generators:
            raise ZeroIdealError("lcm of the zero ideal")
        return reduce(Monomial.lcm, self.generators)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return multiply(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """Prime ideal generated by the 1-based variables in ``vars``.

    Monomial primes are often written as ``p_A``, the prime on the variables
    *not* in ``A``; :meth:`from_omitted` and :meth:`omitted` translate.
    """

    vars: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(int(v) for v in self.vars)))
        if vs and vs[0] < 1:
            raise ValueError(f"variable indices are 1-based, got {vs}")
        object.__setattr__(self, "vars", vs)

    @classmethod
    def maximal(cls, n: int) -> MonomialPrime:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_omitted(cls, omitted: Iterable[int], n: int) -> MonomialPrime:
        """The prime ``p_A = (x_i : i not in A)``."""
        a = set(omitted)
        return cls(tuple(i for i in range(1, n + 1) if i not in a))

    def omitted(self, n: int) -> tuple[int, ...]:
        s = set(self.vars)
        return tuple(i for i in range(1, n + 1) if i not in s)

    def __len__(self) -> int:
        return len(self.vars)

    def is_maximal(self, n: int) -> bool:
        return self.vars == tuple(range(1, n + 1))

    def contains(self, ideal: MonomialIdeal) -> bool:
        """``ideal ⊆ p``: every generator involves a variable of p."""
        s = set(self.vars)
        return all(g.support & s for g in ideal.generators)

    def as_ideal(self, n: int) -> MonomialIdeal:
        return MonomialIdeal(n, tuple(Monomial.var(i, n) for i in self.vars))

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in self.vars) + ")"


def _same_ring(*ideals: MonomialIdeal) -> int:
    ns = {I.n for I in ideals}
    if len(ns) != 1:
        raise DimensionMismatch(f"ideals live in rings of different dimensions {sorted(ns)}")
    return ns.pop()


def minimalize(gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    return MonomialIdeal(n, tuple(Monomial(g) for g in gens))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(I, J)
    return MonomialIdeal(n, tuple(u * v for u in I.generators for v in J.generators))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = multiply(result, I)
    return result


def colon(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """``I : u``, generated by ``g / gcd(g, u)`` for g in G(I)."""
    if len(u) != I.n:
        raise DimensionMismatch(f"monomial of length {len(u)} in ring of dimension {I.n}")
    return MonomialIdeal(I.n, tuple(g.quotient(u) for g in I.generators))


def saturate(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """``I : u^∞``. Exponents of u only matter through its support."""
    u = Monomial(u)
    if len(u) != I.n:
        raise DimensionMismatch(f"monomial of length {len(u)} in ring of dimension {I.n}")
    current = I
    while True:
        nxt = colon(current, u)
        if nxt == current:
            return current
        current = nxt


def localize(I: MonomialIdeal, p: MonomialPrime) -> MonomialIdeal:
    """Monomial localization I(p): set every variable outside p to 1.

    The result keeps the ambient dimension n; its support lies inside p.
    """
    if p.vars and p.vars[-1] > I.n:
        raise DimensionMismatch(f"prime {p} outside ring of dimension {I.n}")
    keep = set(v - 1 for v in p.vars)
    return MonomialIdeal(
        I.n, tuple(Monomial(e if k in keep else 0 for k, e in enumerate(g)) for g in I.generators)
    )


def support_and_gcd(I: MonomialIdeal) -> tuple[frozenset[int], Monomial, bool]:
    """Return ``(supp(I), gcd(I), full_supported)``."""
    if I.is_zero():
        raise ZeroIdealError("support of the zero ideal")
    supp = frozenset().union(*(g.support for g in I.generators))
    g = reduce(Monomial.gcd, I.generators)
    return supp, g, len(supp) == I.n


def restrict(I: MonomialIdeal, variables: Sequence[int]) -> MonomialIdeal:
    """Re-index I into the polynomial ring on the given 1-based variables.

    Every generator must be supported inside ``variables``.
    """
    idx = [v - 1 for v in sorted(variables)]
    gens = []
    for g in I.generators:
        if sum(g[i] for i in idx) != g.degree:
            raise ValueError(f"generator {g} is not supported on {sorted(variables)}")
        gens.append(Monomial(g[i] for i in idx))
    return MonomialIdeal(len(idx), tuple(gens))


def embed(I: MonomialIdeal, variables: Sequence[int], n: int) -> MonomialIdeal:
    """Inverse of :func:`restrict`: place I's variables at the given positions of an n-variable ring."""
    pos = [v - 1 for v in sorted(variables)]
    gens = []
    for g in I.generators:
        e = [0] * n
        for k, p in enumerate(pos):
            e[p] = g[k]
        gens.append(Monomial(e))
    return MonomialIdeal(n, tuple(gens))


def normalize(I: MonomialIdeal) -> MonomialIdeal:
    """Divide out gcd(I) and restrict to supp(I): the result is full-supported with gcd 1."""
    supp, g, _ = support_and_gcd(I)
    J = MonomialIdeal(I.n, tuple(u.divide(g) for u in I.generators))
    supp, _, _ = support_and_gcd(J)
    return restrict(J, sorted(supp))


def permute(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Relabel variables: ``x_i`` becomes ``x_{perm[i-1]}`` (perm is 1-based)."""
    n = I.n
    gens = []
    for g in I.generators:
        e = [0] * n
        for i, x in enumerate(g):
            e[perm[i] - 1] = x
        gens.append(Monomial(e))
    return MonomialIdeal(n, tuple(gens))


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"n": I.n, "generators": [list(g) for g in I.generators]}


def ideal_from_json(data: dict) -> MonomialIdeal:
    return MonomialIdeal(int(data["n"]), tuple(Monomial(g) for g in data["generators"]))
