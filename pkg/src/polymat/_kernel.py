"""Vectorized helpers for equigenerated ideals and their powers.

Monomials are packed into int64 keys with a mixed-radix encoding so that
products become sums and membership becomes a sorted search.
"""

from __future__ import annotations

import numpy as np

_MAX_KEY = 2**62


class Packed:
    """Generators of an equigenerated ideal as a sorted key array."""

    __slots__ = ("n", "base", "weights", "keys")

    def __init__(self, n: int, base: int, keys: np.ndarray):
        if base**n >= _MAX_KEY:
            raise OverflowError(f"exponent base {base} too large for {n} variables")
        self.n = n
        self.base = base
        self.weights = base ** np.arange(n, dtype=np.int64)
        self.keys = keys

    @classmethod
    def from_exponents(cls, exps, base: int) -> Packed:
        arr = np.asarray(exps, dtype=np.int64).reshape(len(exps), -1)
        if arr.size and arr.max() >= base - 1:
            raise OverflowError(f"exponent {arr.max()} does not fit base {base}")
        n = arr.shape[1]
        p = cls(n, base, np.empty(0, dtype=np.int64))
        p.keys = np.unique(arr @ p.weights)
        return p

    def __len__(self) -> int:
        return len(self.keys)

    def exponents(self) -> np.ndarray:
        return (self.keys[:, None] // self.weights[None, :]) % self.base

    def times(self, other: Packed) -> Packed:
        out = Packed(self.n, self.base, np.empty(0, dtype=np.int64))
        out.keys = np.unique((self.keys[:, None] + other.keys[None, :]).ravel())
        return out

    def contains(self, cand: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.keys, cand)
        idx[idx == len(self.keys)] = 0
        return self.keys[idx] == cand


def powers(exps, T: int) -> list[Packed]:
    """Packed generator sets of I, I^2, ..., I^T for an equigenerated I.

    Products of equigenerated ideals need no minimalization beyond dedup.
    """
    arr = np.asarray(exps, dtype=np.int64).reshape(len(exps), -1)
    base = int(arr.max(initial=0)) * T + 2
    first = Packed.from_exponents(arr, base)
    out = [first]
    for _ in range(T - 1):
        out.append(out[-1].times(first))
    return out


def linear_quotient_counts(p: Packed) -> np.ndarray:
    """q_i for every generator under reverse lexicographic order.

    Valid for ideals known to have linear quotients in that order (all
    polymatroidal ideals): x_j lies in the colon of u iff x_j*u/x_k is a
    generator for some k > j with x_k | u, since exactly those monomials
    precede u.
    """
    E = p.exponents()
    n = p.n
    hit = np.zeros((len(p), n), dtype=bool)
    for k in range(1, n):
        divisible = E[:, k] > 0
        if not divisible.any():
            continue
        base_keys = p.keys[divisible] - p.weights[k]
        rows = np.nonzero(divisible)[0]
        for j in range(k):
            hit[rows, j] |= p.contains(base_keys + p.weights[j])
    return hit.sum(axis=1)


def polymatroidal_q(p: Packed) -> int:
    if len(p) <= 1:
        return 0
    return int(linear_quotient_counts(p).max())
