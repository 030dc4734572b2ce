"""Newton polytopes of C_{i,j}^k, block-sum projection and support scaling.

Q_{i,j}^k is the set of x >= 0 with sum(x) = r, prefix sums
``x_1 + ... + x_l <= l`` for l <= i, and ``x_m = 0`` for m > k. Points are
sparse exponent vectors (see :mod:`projschub.polyring`), so the ambient
dimension never has to be fixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import FrozenSet, Iterator

from projschub.matchings import coefficient_via_matchings
from projschub.polyring import (
    ExponentVector,
    add_exponents,
    degree,
    from_dense,
    support_of,
    to_dense,
)

SupportSet = FrozenSet[ExponentVector]


class DomainError(ValueError):
    """An (i, j, k) outside the range where the statement applies."""


@dataclass(frozen=True)
class PolytopeSpec:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if min(self.i, self.j, self.k) < 0:
            raise DomainError(f"negative index in {self}")
        if not 0 <= self.r <= min(self.i, self.j):
            raise DomainError(f"r = {self.r} outside [0, min(i, j)] for {self}")

    @property
    def r(self) -> int:
        return self.i + self.j - self.k


@dataclass
class WitnessReport:
    """Outcome of a two-sided set comparison, with the points that differ."""

    check: str
    instance: dict
    left_only: SupportSet = frozenset()
    right_only: SupportSet = frozenset()
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.left_only and not self.right_only

    def __bool__(self) -> bool:
        return self.ok

    def to_obj(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "ok": self.ok,
            "left_only": [dict(v) for v in sorted_points(self.left_only)],
            "right_only": [dict(v) for v in sorted_points(self.right_only)],
            **self.detail,
        }


def sorted_points(points) -> list[ExponentVector]:
    """Lexicographic order on the dense form of the vectors."""
    points = list(points)
    width = max((v[-1][0] for v in points if v), default=0)
    return sorted(points, key=lambda v: to_dense(v, width))


def _prefix_points(total: int, length: int, cap) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of the given length summing to ``total``
    whose l-th prefix sum is at most ``cap(l)``; lexicographic order."""
    if length == 0:
        if total == 0:
            yield ()
        return
    x = [0] * length

    def walk(m: int, s: int):
        if m == length - 1:
            if total - s <= cap(m + 1):
                x[m] = total - s
                yield tuple(x)
            return
        for v in range(0, min(total, cap(m + 1)) - s + 1):
            x[m] = v
            yield from walk(m + 1, s + v)

    yield from walk(0, 0)


def _cap(i: int, scale: int):
    return lambda l: scale * l if l <= i else float("inf")


def polytope_lattice_points(spec: PolytopeSpec) -> SupportSet:
    return frozenset(
        from_dense(x) for x in _prefix_points(spec.r, spec.k, _cap(spec.i, 1))
    )


def dilated_lattice_points(spec: PolytopeSpec, N: int) -> SupportSet:
    """Lattice points of N * Q, straight from the scaled constraints."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return frozenset(
        from_dense(x) for x in _prefix_points(N * spec.r, spec.k, _cap(spec.i, N))
    )


def in_polytope(x: ExponentVector, i: int, j: int, k: int) -> bool:
    """Check the three constraint families of Q_{i,j}^k on one point."""
    r = i + j - k
    if degree(x) != r:
        return False
    if any(idx > k for idx, _ in x):
        return False
    s = 0
    d = dict(x)
    for l in range(1, i + 1):
        s += d.get(l, 0)
        if s > l:
            return False
    return True


def _require_window(i: int, j: int, k: int) -> None:
    if min(i, j, k) < 0 or not max(i, j) <= k <= i + j:
        raise DomainError(f"(i, j, k) = ({i}, {j}, {k}) violates max(i, j) <= k <= i + j")


def snp_verify(i: int, j: int, k: int) -> WitnessReport:
    """Compare Supp(C_{i,j}^k) (matchings route) with the lattice points of Q."""
    _require_window(i, j, k)
    supp = support_of(coefficient_via_matchings(i, j, k))
    pts = polytope_lattice_points(PolytopeSpec(i, j, k))
    return WitnessReport(
        "snp", {"i": i, "j": j, "k": k}, supp - pts, pts - supp, {"points": len(pts)}
    )


def pi_n_project(x: ExponentVector, N: int) -> ExponentVector:
    """Block sums: coordinate g collects x_m for (g-1)N < m <= gN."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out: dict[int, int] = {}
    for m, e in x:
        g = (m - 1) // N + 1
        out[g] = out.get(g, 0) + e
    return tuple(sorted(out.items()))


def minkowski_power(s: SupportSet, N: int) -> SupportSet:
    """All sums of N points of s, repetition allowed."""
    if N < 1:
        raise ValueError("N must be >= 1")
    s = frozenset(s)
    acc = s
    for _ in range(N - 1):
        acc = frozenset(add_exponents(a, b) for a in acc for b in s)
    return acc


def verify_scaling(i: int, j: int, k: int, N: int) -> WitnessReport:
    """pi_N(Supp(C_{Ni,Nj}^{Nk})) against Supp((C_{i,j}^k)^N)."""
    _require_window(i, j, k)
    big = coefficient_via_matchings(N * i, N * j, N * k)
    left = frozenset(pi_n_project(x, N) for x in support_of(big))
    right = support_of(coefficient_via_matchings(i, j, k) ** N)
    return WitnessReport(
        "scaling",
        {"i": i, "j": j, "k": k, "N": N},
        left - right,
        right - left,
        {"points": len(right), "scaled_terms": len(big)},
    )


def verify_idp(i: int, j: int, k: int, N: int) -> WitnessReport:
    """Lattice points of N*Q against the N-fold Minkowski sum of Q's points."""
    _require_window(i, j, k)
    spec = PolytopeSpec(i, j, k)
    left = dilated_lattice_points(spec, N)
    right = minkowski_power(polytope_lattice_points(spec), N)
    return WitnessReport(
        "idp", {"i": i, "j": j, "k": k, "N": N}, left - right, right - left, {"points": len(left)}
    )


def term_count(i: int, j: int, k: int) -> tuple[int, int]:
    """(r! C(i,r) C(j,r), sum of the coefficients of C_{i,j}^k)."""
    r = i + j - k
    if r < 0:
        raise ValueError(f"r = {r} < 0")
    formula = factorial(r) * comb(i, r) * comb(j, r)
    enumerated = sum(c for _, c in coefficient_via_matchings(i, j, k).items())
    return formula, enumerated
