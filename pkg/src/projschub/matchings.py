"""r-matchings of the complete bipartite graph G^i_j and their beta-weights.

Vertices are ``a_1..a_i`` and ``b_1..b_j``. An edge ``a_g b_h`` inside a
matching M has crossing value ``#{a_p b_q in M : p < g, q < h}`` and weight
index ``g + h - X - 1``; the weight of M is the product of
``beta_{weight index}`` over its edges. Summing weights over all r-matchings
with ``r = i + j - k`` gives C_{i,j}^k.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, NamedTuple

from projschub.polyring import Family, Polynomial


class EdgeNotInMatchingError(ValueError):
    pass


class Edge(NamedTuple):
    g: int
    h: int


@dataclass(frozen=True)
class Matching:
    i: int
    j: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(Edge(*e) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        gs = [e.g for e in edges]
        hs = [e.h for e in edges]
        if len(set(gs)) != len(gs) or len(set(hs)) != len(hs):
            raise ValueError(f"edges are not vertex-disjoint: {edges}")
        for g, h in edges:
            if not (1 <= g <= self.i and 1 <= h <= self.j):
                raise ValueError(f"edge a_{g} b_{h} outside G^{self.i}_{self.j}")

    @property
    def r(self) -> int:
        return len(self.edges)

    @property
    def subset(self) -> SubsetP:
        return SubsetP(self.i, tuple(e.g for e in self.edges))

    def __str__(self):
        return "{" + ", ".join(f"a{g}b{h}" for g, h in self.edges) + "}"


@dataclass(frozen=True)
class SubsetP:
    """A strictly increasing sequence ``p_1 < ... < p_r <= i``."""

    i: int
    p: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.p)
        object.__setattr__(self, "p", p)
        if any(a >= b for a, b in zip(p, p[1:])):
            raise ValueError(f"P must be strictly increasing: {p}")
        if p and (p[0] < 1 or p[-1] > self.i):
            raise ValueError(f"P={p} is not a subset of [1..{self.i}]")

    @property
    def r(self) -> int:
        return len(self.p)


def iter_matchings(i: int, j: int, r: int) -> Iterator[Matching]:
    """Yield every r-matching of G^i_j once.

    Order: r-subsets of A lexicographically, then injections into B
    lexicographically.
    """
    if r < 0 or r > min(i, j):
        return
    for gs in combinations(range(1, i + 1), r):
        for hs in permutations(range(1, j + 1), r):
            yield Matching(i, j, tuple(Edge(g, h) for g, h in zip(gs, hs)))


def enumerate_matchings(i: int, j: int, r: int) -> list[Matching]:
    return list(iter_matchings(i, j, r))


def crossing_value(m: Matching, e: Edge) -> int:
    e = Edge(*e)
    if e not in m.edges:
        raise EdgeNotInMatchingError(f"a_{e.g} b_{e.h} is not an edge of {m}")
    return sum(1 for p, q in m.edges if p < e.g and q < e.h)


def edge_weight_index(m: Matching, e: Edge) -> int:
    e = Edge(*e)
    return e.g + e.h - crossing_value(m, e) - 1


def matching_weight(m: Matching) -> Polynomial:
    exps: dict[int, int] = {}
    for e in m.edges:
        w = edge_weight_index(m, e)
        exps[w] = exps.get(w, 0) + 1
    return Polynomial.from_terms(Family.BETA, [(exps, 1)])


def rotate(m: Matching) -> Matching:
    """180-degree rotation of the drawing, G^i_j -> G^j_i.

    B is drawn right to left under A, so turning the picture over sends
    ``a_g b_h`` to ``a_h b_g``; crossing values and weights are unchanged.
    """
    return Matching(m.j, m.i, tuple(Edge(h, g) for g, h in m.edges))


def group_by_subset(i: int, j: int, r: int) -> dict[SubsetP, list[Matching]]:
    groups: dict[SubsetP, list[Matching]] = {}
    for m in iter_matchings(i, j, r):
        groups.setdefault(m.subset, []).append(m)
    return groups


# Monomials in the fold are packed into one int: 8 bits of exponent per
# variable index. Exponents never exceed r <= min(i, j), so 255 is plenty.
_FIELD = 8


def _decode(key: int) -> dict[int, int]:
    exps = {}
    idx = 0
    mask = (1 << _FIELD) - 1
    while key:
        e = key & mask
        if e:
            exps[idx] = e
        key >>= _FIELD
        idx += 1
    return exps


def _fold_weights(i: int, j: int, r: int) -> Counter:
    """Sum of wt(M) over r-matchings as a Counter of packed monomials.

    Depth-first over edges a_g b_h with g increasing, so every edge already
    placed has a smaller A-index and the crossing value of the new edge is
    the number of used B-vertices below h.
    """
    counts: Counter = Counter()
    if r < 0 or r > min(i, j):
        return counts
    if r > 255:
        raise OverflowError("exponent field too narrow for r > 255")
    if r == 0:
        counts[0] = 1
        return counts

    def walk(g_start: int, left: int, used: int, key: int) -> None:
        for g in range(g_start, i - left + 2):
            for h in range(1, j + 1):
                bit = 1 << h
                if used & bit:
                    continue
                w = g + h - (used & (bit - 1)).bit_count() - 1
                k2 = key + (1 << (_FIELD * w))
                if left == 1:
                    counts[k2] += 1
                else:
                    walk(g + 1, left - 1, used | bit, k2)

    walk(1, r, 0, 0)
    return counts


@lru_cache(maxsize=None)
def coefficient_via_matchings(i: int, j: int, k: int) -> Polynomial:
    """C_{i,j}^k as the sum of wt(M) over all (i+j-k)-matchings of G^i_j."""
    counts = _fold_weights(i, j, i + j - k)
    return Polynomial.from_terms(Family.BETA, [(_decode(key), c) for key, c in counts.items()])


def subset_weight_sum(i: int, j: int, P: SubsetP) -> Polynomial:
    """Sum of wt(M) over the class G^i_j(P) of matchings with A-endpoints P."""
    total = Polynomial.zero(Family.BETA)
    for hs in permutations(range(1, j + 1), P.r):
        total = total + matching_weight(Matching(i, j, tuple(zip(P.p, hs))))
    return total
