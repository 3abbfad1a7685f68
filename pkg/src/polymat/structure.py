"""Polymatroidal recognition, linear relation graph, analytic spread and
depth through linear quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from . import _kernel
from .errors import NoLinearQuotients, NotPolymatroidalError, ZeroIdealError
from .monomial import Monomial, MonomialIdeal


@dataclass(frozen=True)
class ExchangeCheck:
    """Outcome of the exchange-property test; truthy when polymatroidal.

    ``witness`` is ``(u, v, i)`` with ``i`` 1-based: ``deg_i(u) > deg_i(v)``
    but no admissible ``j`` gives ``x_j * u / x_i`` in I.
    """

    ok: bool
    witness: tuple[Monomial, Monomial, int] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _nonzero(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise ZeroIdealError("operation undefined on the zero ideal")


def is_polymatroidal(I: MonomialIdeal) -> ExchangeCheck:
    _nonzero(I)
    if not I.is_equigenerated():
        return ExchangeCheck(False, None, f"generated in degrees {I.degrees()}")
    gens = set(I.generators)
    n = I.n
    for u in I.generators:
        for v in I.generators:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in gens:
                            ok = True
                            break
                if not ok:
                    return ExchangeCheck(False, (u, v, i + 1), "exchange property fails")
    return ExchangeCheck(True)


def is_matroidal(I: MonomialIdeal) -> bool:
    return I.is_squarefree() and bool(is_polymatroidal(I))


@dataclass(frozen=True)
class LinearRelationGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.vertices)

    @property
    def s(self) -> int:
        return len(self.components)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "components": [list(c) for c in self.components],
        }


def linear_relation_graph(I: MonomialIdeal) -> LinearRelationGraph:
    """Edge {i, j} whenever ``x_i * u = x_j * v`` for generators u, v.

    Equivalently ``v = x_i * u / x_j``; isolated variables are not vertices.
    """
    _nonzero(I)
    gens = set(I.generators)
    n = I.n
    edges = set()
    for u in I.generators:
        for j in range(n):
            if not u[j]:
                continue
            for i in range(n):
                if i == j:
                    continue
                w = list(u)
                w[j] -= 1
                w[i] += 1
                if tuple(w) in gens:
                    edges.add((min(i, j) + 1, max(i, j) + 1))
    g = nx.Graph()
    g.add_edges_from(edges)
    comps = sorted(tuple(sorted(c)) for c in nx.connected_components(g))
    return LinearRelationGraph(tuple(sorted(g.nodes)), tuple(sorted(edges)), tuple(comps))


def analytic_spread(I: MonomialIdeal) -> int:
    """ℓ(I) = r - s + 1 from the linear relation graph (polymatroidal I only)."""
    if not is_polymatroidal(I):
        raise NotPolymatroidalError(f"analytic spread formula needs a polymatroidal ideal: {I}")
    graph = linear_relation_graph(I)
    return graph.r - graph.s + 1


@dataclass(frozen=True)
class LinearQuotientsReport:
    order: tuple[Monomial, ...]
    q_values: tuple[int, ...]
    q: int
    linear: bool


def _ordered(I: MonomialIdeal, order) -> tuple[Monomial, ...]:
    if order == "revlex":
        return I.generators
    if order == "lex":
        return tuple(sorted(I.generators, key=lambda g: (g.degree, tuple(-e for e in g))))
    seq = tuple(Monomial(g) for g in order)
    if sorted(seq) != sorted(I.generators):
        raise ValueError("explicit order must be a permutation of G(I)")
    return seq


def linear_quotients_q(I: MonomialIdeal, order: str | Sequence = "revlex") -> LinearQuotientsReport:
    """Successive colons ``(u_1..u_{i-1}) : u_i`` in the given generator order.

    ``q_values[i-2]`` counts the variables among the minimal generators of
    the i-th colon; ``linear`` is False as soon as one colon needs a
    generator of degree > 1.
    """
    _nonzero(I)
    seq = _ordered(I, order)
    q_values = []
    linear = True
    for i in range(1, len(seq)):
        u = seq[i]
        colon_gens = MonomialIdeal(I.n, tuple(seq[l].quotient(u) for l in range(i))).generators
        nvars = sum(1 for g in colon_gens if g.degree == 1)
        if nvars != len(colon_gens):
            linear = False
        q_values.append(nvars)
    return LinearQuotientsReport(seq, tuple(q_values), max(q_values, default=0), linear)


def depth_polymatroidal(I: MonomialIdeal) -> int:
    """depth R/I = n - q(I) - 1, valid when I has linear quotients."""
    report = linear_quotients_q(I)
    if not report.linear:
        raise NoLinearQuotients(f"{I} has no linear quotients in reverse lexicographic order")
    return I.n - report.q - 1


def q_polymatroidal(I: MonomialIdeal) -> int:
    """q(I) for an ideal already known to be polymatroidal (vectorized)."""
    _nonzero(I)
    packed = _kernel.Packed.from_exponents(I.generators, max(max(g) for g in I.generators) + 2)
    return _kernel.polymatroidal_q(packed)
