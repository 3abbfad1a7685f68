"""Depth of R/I from multigraded Betti numbers.

``β_{i,a}(I)`` is the dimension of the reduced homology ``H̃_{i-1}`` of the
upper Koszul simplicial complex ``K^a(I) = {τ ⊆ supp(a) squarefree :
x^{a-τ} ∈ I}``; nonzero Betti numbers only occur at lcms of generators.
Ranks are computed exactly over the rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import BudgetExceeded, ZeroIdealError
from .monomial import Monomial, MonomialIdeal

DEFAULT_LATTICE_BUDGET = 50_000
DEFAULT_COST_BUDGET = 5_000_000


def lcm_lattice(I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET) -> list[Monomial]:
    """All lcms of nonempty subsets of G(I), sorted canonically."""
    if I.is_zero():
        raise ZeroIdealError("lcm lattice of the zero ideal")
    gens = np.array(I.generators, dtype=np.int64)
    top = I.lcm()
    ndiv = prod(e + 1 for e in top)
    if ndiv <= budget:
        # a divisor m of lcm(G) is a lattice point iff it is the lcm of the generators dividing it
        points = []
        for exps in itertools.product(*(range(e + 1) for e in top)):
            m = np.array(exps, dtype=np.int64)
            below = gens[(gens <= m).all(axis=1)]
            if len(below) and (below.max(axis=0) == m).all():
                points.append(Monomial(exps))
    else:
        found: set[Monomial] = set()
        for g in I.generators:
            found |= {g.lcm(m) for m in found}
            found.add(g)
            if len(found) > budget:
                raise BudgetExceeded("lcm lattice", len(found), budget)
        points = list(found)
    return sorted(points, key=Monomial.revlex_key)


@dataclass(frozen=True)
class UpperKoszulComplex:
    multidegree: Monomial
    faces: tuple[tuple[int, ...], ...]  # 1-based vertex tuples, the empty face included

    def dimension_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
        return counts


def upper_koszul_complex(I: MonomialIdeal, a) -> UpperKoszulComplex:
    a = Monomial(a)
    supp = sorted(a.support)
    gens = np.array(I.generators, dtype=np.int64)
    subsets = [c for r in range(len(supp) + 1) for c in itertools.combinations(supp, r)]
    shifted = np.tile(np.array(a, dtype=np.int64), (len(subsets), 1))
    for row, tau in enumerate(subsets):
        for v in tau:
            shifted[row, v - 1] -= 1
    member = (gens[None, :, :] <= shifted[:, None, :]).all(axis=2).any(axis=1)
    faces = tuple(tau for tau, ok in zip(subsets, member) if ok)
    return UpperKoszulComplex(a, faces)


def rank_over_q(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        top = M[rank]
        for r in range(rank + 1, len(M)):
            row = M[r]
            f = row[c]
            M[r] = [(top[c] * row[j] - f * top[j]) // prev for j in range(ncols)]
        prev = top[c]
        rank += 1
        if rank == len(M):
            break
    return rank


def reduced_homology(faces) -> dict[int, int]:
    """Nonzero reduced Betti numbers ``{k: dim H̃_k}`` over Q of a simplicial
    complex given by its faces (including the empty face)."""
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    if not by_dim:
        return {}
    top = max(by_dim)
    index = {k: {f: i for i, f in enumerate(sorted(fs))} for k, fs in by_dim.items()}
    ranks = {}
    for k in range(0, top + 1):
        # boundary from k-faces to (k-1)-faces
        rows_idx = index.get(k - 1, {})
        cols = index.get(k, {})
        if not rows_idx or not cols:
            ranks[k] = 0
            continue
        matrix = [[0] * len(cols) for _ in rows_idx]
        for f, j in cols.items():
            for pos in range(len(f)):
                face = f[:pos] + f[pos + 1:]
                matrix[rows_idx[face]][j] = -1 if pos % 2 else 1
        ranks[k] = rank_over_q(matrix)
    out = {}
    for k in range(-1, top + 1):
        h = len(index.get(k, {})) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers ``β_{i,a}(I)``; pd and depth refer to R/I."""

    n: int
    entries: dict[tuple[int, Monomial], int]

    @property
    def pd(self) -> int:
        return 1 + max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def graded(self) -> dict[int, int]:
        totals: dict[int, int] = {}
        for (i, _), r in self.entries.items():
            totals[i] = totals.get(i, 0) + r
        return totals

    def to_json(self) -> dict:
        return {
            "pd": self.pd,
            "depth": self.depth,
            "betti": [
                {"i": i, "a": list(a), "rank": r}
                for (i, a), r in sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].revlex_key()))
            ],
        }


def betti_table(I: MonomialIdeal, budget: int = DEFAULT_COST_BUDGET) -> BettiTable:
    lattice = lcm_lattice(I)
    cost = sum(2 ** len(a.support) for a in lattice) * len(I.generators)
    if cost > budget:
        raise BudgetExceeded("homology cost", cost, budget)
    entries = {}
    for a in lattice:
        cx = upper_koszul_complex(I, a)
        if len(cx.faces) == 2 ** len(a.support):
            continue  # full simplex: acyclic
        for k, h in reduced_homology(cx.faces).items():
            entries[(k + 1, a)] = h
    return BettiTable(I.n, entries)


def depth_oracle(I: MonomialIdeal, budget: int = DEFAULT_COST_BUDGET) -> int:
    return betti_table(I, budget).depth
