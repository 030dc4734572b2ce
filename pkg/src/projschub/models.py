"""Knutson-Tao puzzles and Thomas-Yong edge-labeled tableaux for P^n.

For projective space both kinds of object are determined by an r-subset P of
[i]: the positions of the equivariant pieces along the puzzle's third band,
or the boxes carrying the edge labels 1..r. Only that encoding is stored;
the weight depends on P alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from projschub.formulas import coefficient_via_explicit, grouped_factor
from projschub.matchings import SubsetP
from projschub.newton import DomainError, WitnessReport
from projschub.polyring import Family, Polynomial

KINDS = ("puzzle", "tableau")


@dataclass(frozen=True)
class PuzzleEncoding:
    i: int
    j: int
    P: SubsetP

    def __post_init__(self):
        if self.P.i != self.i or self.P.r > min(self.i, self.j):
            raise ValueError(f"invalid puzzle encoding {self}")

    @property
    def k(self) -> int:
        return self.i + self.j - self.P.r


@dataclass(frozen=True)
class TableauEncoding:
    """Filling of the skew shape (k/i, j); P lists the boxes under which the
    edge labels 1..r sit."""

    i: int
    j: int
    k: int
    P: SubsetP

    def __post_init__(self):
        if self.P.i != self.i or self.P.r != self.i + self.j - self.k or self.P.r > self.j:
            raise ValueError(f"invalid tableau encoding {self}")

    def edge_labels(self) -> dict[int, int]:
        """box position -> edge label"""
        return {p: s for s, p in enumerate(self.P.p, start=1)}


def puzzle_weight(z: PuzzleEncoding) -> Polynomial:
    return grouped_factor(z.P, z.j)


def tableau_weight(t: TableauEncoding) -> Polynomial:
    return grouped_factor(t.P, t.j)


def _window(i: int, j: int, k: int) -> bool:
    return min(i, j, k) >= 0 and max(i, j) <= k <= i + j


def _puzzles(i: int, j: int, k: int) -> list[PuzzleEncoding]:
    r = i + j - k
    return [PuzzleEncoding(i, j, SubsetP(i, ps)) for ps in combinations(range(1, i + 1), r)]


def _tableaux(i: int, j: int, k: int) -> list[TableauEncoding]:
    # place edge labels 1..r left to right under distinct boxes of the first row segment [i]
    r = i + j - k
    out = []

    def place(label: int, start: int, boxes: tuple[int, ...]):
        if label > r:
            out.append(TableauEncoding(i, j, k, SubsetP(i, boxes)))
            return
        for box in range(start, i - (r - label) + 1):
            place(label + 1, box + 1, boxes + (box,))

    place(1, 1, ())
    return out


def enumerate_model_objects(i: int, j: int, k: int, kind: str) -> list:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if not _window(i, j, k):
        return []
    return _puzzles(i, j, k) if kind == "puzzle" else _tableaux(i, j, k)


def model_weight(obj) -> Polynomial:
    if isinstance(obj, PuzzleEncoding):
        return puzzle_weight(obj)
    return tableau_weight(obj)


def verify_model_sum(i: int, j: int, k: int, kind: str) -> WitnessReport:
    """Sum of model weights against the explicit formula for C_{i,j}^k."""
    if not _window(i, j, k):
        raise DomainError(f"(i, j, k) = ({i}, {j}, {k}) outside the nonvanishing window")
    objs = enumerate_model_objects(i, j, k, kind)
    total = Polynomial.zero(Family.T)
    for obj in objs:
        total = total + model_weight(obj)
    diff = total - coefficient_via_explicit(i, j, k)
    return WitnessReport(
        f"models/{kind}",
        {"i": i, "j": j, "k": k},
        frozenset(e for e, c in diff.items() if c > 0),
        frozenset(e for e, c in diff.items() if c < 0),
        {"objects": len(objs)},
    )
