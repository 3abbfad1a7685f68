"""Associated primes and depth along the powers of an ideal, and the
stability indices astab / dstab read off from that trace.

For polymatroidal ideals both indices are below the analytic spread, so
tracing powers ``1 .. ℓ(I) - 1`` certifies the result. Other ideals are
traced up to ``max_power`` and the answer is labeled budget-limited.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from . import _kernel
from .decomposition import (
    AssociatedPrimesSet,
    ass_colon_oracle,
    associated_primes,
    candidate_primes,
)
from .errors import BudgetExceeded, ZeroIdealError
from .homology import depth_oracle
from .monomial import Monomial, MonomialIdeal, MonomialPrime, multiply
from .structure import analytic_spread, is_polymatroidal, linear_quotients_q

log = logging.getLogger(__name__)

UNSTABILIZED = "unstabilized"
DEFAULT_MAX_POWER = 10
DEFAULT_GENERATOR_BUDGET = 300

Index = Union[int, str]


@dataclass(frozen=True)
class PowerStep:
    t: int
    generators: int
    ass: AssociatedPrimesSet | None
    depth: int | None


@dataclass(frozen=True)
class PowerTrace:
    ideal: MonomialIdeal
    steps: tuple[PowerStep, ...]
    polymatroidal: bool
    bound: int
    certified: bool
    budget_exhausted: bool = False
    diagnostics: tuple[str, ...] = ()

    def step(self, t: int) -> PowerStep:
        return self.steps[t - 1]

    def to_json(self) -> list[dict]:
        return [
            {
                "t": s.t,
                "ass": s.ass.to_json() if s.ass is not None else None,
                "depth": s.depth,
                "gens": s.generators,
            }
            for s in self.steps
        ]


def polymatroidal_power_steps(I: MonomialIdeal, T: int) -> list[PowerStep]:
    """Ass and depth of I, I^2, ..., I^T for a polymatroidal I.

    Each power is evaluated on its own (persistence is never assumed): p is
    associated to I^t iff q(I(p)^t) = |p| - 1, and depth R/I^t = n - q(I^t) - 1.
    """
    n = I.n
    full = _kernel.powers(I.generators, T)
    ass_sets: list[set[MonomialPrime]] = [set() for _ in range(T)]
    for p, local in candidate_primes(I):
        if p.is_maximal(n):
            seq = full
        else:
            seq = _kernel.powers(local.generators, T)
        for t, packed in enumerate(seq):
            if _kernel.polymatroidal_q(packed) == len(p) - 1:
                ass_sets[t].add(p)
    steps = []
    for t, packed in enumerate(full):
        depth = n - _kernel.polymatroidal_q(packed) - 1
        steps.append(PowerStep(t + 1, len(packed), AssociatedPrimesSet(n, frozenset(ass_sets[t])), depth))
    return steps


def _general_step(J: MonomialIdeal, t: int, budget: int) -> tuple[PowerStep, str | None]:
    note = None
    try:
        if len(J.generators) <= budget:
            ass = associated_primes(J)
        else:
            ass = ass_colon_oracle(J)
    except BudgetExceeded as exc:
        ass, note = None, f"t={t}: associated primes skipped ({exc})"
    depth = None
    report = linear_quotients_q(J) if len(J.generators) <= budget else None
    if report is not None and report.linear:
        depth = J.n - report.q - 1
    else:
        try:
            depth = depth_oracle(J)
        except BudgetExceeded as exc:
            note = (note + "; " if note else "") + f"t={t}: depth unknown ({exc})"
    return PowerStep(t, len(J.generators), ass, depth), note


def power_trace(
    I: MonomialIdeal,
    max_power: int = DEFAULT_MAX_POWER,
    budget: int = DEFAULT_GENERATOR_BUDGET,
) -> PowerTrace:
    """Ass(I^t) and depth R/I^t for t = 1..T.

    Polymatroidal input: T = min(max_power, ℓ(I) - 1) (at least 1), certified
    when max_power does not cut below ℓ(I) - 1. Otherwise T = max_power and
    the trace stops early once a power exceeds the budgets.
    """
    if I.is_zero():
        raise ZeroIdealError("power trace of the zero ideal")
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    if is_polymatroidal(I):
        ell = analytic_spread(I)
        T = max(1, min(max_power, ell - 1))
        steps = polymatroidal_power_steps(I, T)
        return PowerTrace(I, tuple(steps), True, T, certified=ell - 1 <= max_power)
    steps = []
    notes = []
    exhausted = False
    J = I
    for t in range(1, max_power + 1):
        if t > 1:
            J = multiply(J, I)
        if len(J.generators) > 20 * budget:
            exhausted = True
            notes.append(f"t={t}: {len(J.generators)} generators exceed budget")
            break
        step, note = _general_step(J, t, budget)
        steps.append(step)
        if note:
            notes.append(note)
            log.info(note)
        if step.ass is None or step.depth is None:
            exhausted = True
            break
    return PowerTrace(I, tuple(steps), False, max_power, False, exhausted, tuple(notes))


def _stable_index(values: list, certified: bool) -> Index:
    """Least t with values[t-1] == ... == values[-1]; a lone or changing
    final value is only trusted when the bound is certified."""
    if not values:
        return UNSTABILIZED
    t = len(values)
    while t > 1 and values[t - 2] == values[-1]:
        t -= 1
    if not certified and t == len(values):
        return UNSTABILIZED
    return t


def _known_prefix(trace: PowerTrace, attr: str) -> list:
    out = []
    for s in trace.steps:
        v = getattr(s, attr)
        if v is None:
            break
        out.append(v)
    return out


def _complete(trace: PowerTrace, values: list) -> bool:
    return trace.certified and len(values) == trace.bound


@dataclass(frozen=True)
class StabilityReport:
    astab: Index
    dstab: Index
    stable_ass: AssociatedPrimesSet | None
    analytic_spread: int | None
    trace: PowerTrace
    certified: bool
    seed: int | None = field(default=None)

    @property
    def label(self) -> str:
        return "proved-stable" if self.certified else "budget-stable"

    def to_json(self) -> dict:
        out = {
            "astab": self.astab,
            "dstab": self.dstab,
            "certified": self.certified,
            "ell": self.analytic_spread,
            "trace": self.trace.to_json(),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@lru_cache(maxsize=8192)
def stability_report(
    I: MonomialIdeal,
    max_power: int = DEFAULT_MAX_POWER,
    budget: int = DEFAULT_GENERATOR_BUDGET,
) -> StabilityReport:
    trace = power_trace(I, max_power, budget)
    asses = _known_prefix(trace, "ass")
    depths = _known_prefix(trace, "depth")
    a = _stable_index(asses, _complete(trace, asses))
    d = _stable_index(depths, _complete(trace, depths))
    ell = analytic_spread(I) if trace.polymatroidal else None
    stable = asses[-1] if asses and a != UNSTABILIZED else None
    return StabilityReport(a, d, stable, ell, trace, trace.certified)


def astab(I: MonomialIdeal, max_power: int = DEFAULT_MAX_POWER) -> Index:
    return stability_report(I, max_power).astab


def dstab(I: MonomialIdeal, max_power: int = DEFAULT_MAX_POWER) -> Index:
    return stability_report(I, max_power).dstab


def linear_relation_witness(I: MonomialIdeal) -> tuple[Monomial, Monomial, Monomial, int, int] | None:
    """Generators u, v, w and 1-based i, j with ``x_i u = x_j v`` and ``x_i x_j | w``."""
    gens = set(I.generators)
    n = I.n
    for u in I.generators:
        for j in range(n):
            for i in range(n):
                if i == j or not u[j]:
                    continue
                v = list(u)
                v[j] -= 1
                v[i] += 1
                v = Monomial(v)
                if v not in gens:
                    continue
                for w in I.generators:
                    if w[i] and w[j]:
                        return u, v, w, i + 1, j + 1
    return None

