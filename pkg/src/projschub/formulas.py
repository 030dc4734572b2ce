"""Algebraic routes to C_{i,j}^k and the sigma-expansion algebra of P^n.

All coefficients are computed in P^infinity (unbounded t-indices); a finite
ambient dimension n only drops the classes sigma_k with k > n afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Union

from projschub.matchings import SubsetP, coefficient_via_matchings
from projschub.polyring import Family, Polynomial, beta_to_t, t_diff

INFINITY = math.inf

Dimension = Union[int, float]


def in_window(i: int, j: int, k: int, n: Dimension = INFINITY) -> bool:
    """Nonvanishing criterion ``max(i, j) <= k <= min(i + j, n)``."""
    return max(i, j) <= k <= min(i + j, n)


@dataclass(frozen=True)
class ExpansionResult:
    i: int
    j: int
    n: Dimension
    coeffs: Mapping[int, Polynomial] = field(default_factory=dict)

    def __getitem__(self, k: int) -> Polynomial:
        return self.coeffs[k]


def _check_dim(n: Dimension, *classes: int) -> None:
    for c in classes:
        if c < 0:
            raise ValueError(f"class index must be nonnegative, got {c}")
        if c > n:
            raise ValueError(f"class index {c} exceeds ambient dimension {n}")


def pieri_expand(k: int, n: Dimension) -> ExpansionResult:
    """sigma_1 * sigma_k = sigma_{k+1} + (t_1 - t_{k+1}) sigma_k in P^n."""
    _check_dim(n, k)
    coeffs = {}
    if k + 1 <= n:
        coeffs[k + 1] = Polynomial.one(Family.T)
    eq = t_diff(1, k + 1)
    if eq:
        coeffs[k] = eq
    return ExpansionResult(1, k, n, coeffs)


@lru_cache(maxsize=None)
def coefficient_via_recurrence(i: int, j: int, k: int) -> Polynomial:
    """C_{i,j}^k from C_{i+1,j}^k = (t_{i+1} - t_{k+1}) C_{i,j}^k + C_{i,j}^{k-1}."""
    if i < 0 or j < 0 or k < 0:
        return Polynomial.zero(Family.T)
    if i == 0:
        return Polynomial.one(Family.T) if k == j else Polynomial.zero(Family.T)
    if i == 1:
        if k == j + 1:
            return Polynomial.one(Family.T)
        if k == j:
            return t_diff(1, j + 1)
        return Polynomial.zero(Family.T)
    return t_diff(i, k + 1) * coefficient_via_recurrence(i - 1, j, k) + coefficient_via_recurrence(
        i - 1, j, k - 1
    )


def grouped_factor(P: SubsetP, j: int) -> Polynomial:
    """prod_s (t_{p_s} - t_{p_s + j + 1 - s})."""
    if P.r > j:
        raise ValueError(f"|P| = {P.r} exceeds j = {j}")
    out = Polynomial.one(Family.T)
    for s, p in enumerate(P.p, start=1):
        out = out * t_diff(p, p + j + 1 - s)
    return out


@lru_cache(maxsize=None)
def coefficient_via_explicit(i: int, j: int, k: int) -> Polynomial:
    """Sum over 1 <= p_1 < ... < p_r <= i of the grouped factor, r = i + j - k."""
    r = i + j - k
    total = Polynomial.zero(Family.T)
    if r < 0 or r > min(i, j):
        return total
    for ps in combinations(range(1, i + 1), r):
        total = total + grouped_factor(SubsetP(i, ps), j)
    return total


def coefficient(i: int, j: int, k: int, family: Family = Family.T) -> Polynomial:
    if family is Family.BETA:
        return coefficient_via_matchings(i, j, k)
    return coefficient_via_explicit(i, j, k)


def expand_product(
    i: int, j: int, n: Dimension = INFINITY, family: Family = Family.T
) -> ExpansionResult:
    """All nonzero C_{i,j}^k of sigma_i * sigma_j, truncated to k <= n."""
    _check_dim(n, i, j)
    coeffs = {}
    for k in range(max(i, j), i + j + 1):
        if k > n:
            break
        c = coefficient(i, j, k, family)
        if c:
            coeffs[k] = c
    return ExpansionResult(i, j, n, coeffs)


def _as_t(p: Polynomial) -> Polynomial:
    return beta_to_t(p) if p.family is Family.BETA else p


def multiply_expansions(
    left: Mapping[int, Polynomial] | ExpansionResult,
    factor: int,
    n: Dimension,
    side: str = "right",
) -> dict[int, Polynomial]:
    """(sum_k c_k sigma_k) * sigma_factor, coefficients in t.

    ``side="left"`` computes sigma_factor * (sum_k c_k sigma_k) using
    expand_product(factor, k) instead of expand_product(k, factor), which
    keeps associativity checks from leaning on commutativity.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if isinstance(left, ExpansionResult):
        left = left.coeffs
    _check_dim(n, factor, *left)
    out: dict[int, Polynomial] = {}
    for k, c in left.items():
        c = _as_t(c)
        prod = expand_product(k, factor, n) if side == "right" else expand_product(factor, k, n)
        for m, d in prod.coeffs.items():
            out[m] = out.get(m, Polynomial.zero(Family.T)) + c * d
    return {m: c for m, c in sorted(out.items()) if c}
