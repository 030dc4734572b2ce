from itertools import combinations

import pytest

from projschub.formulas import coefficient_via_explicit, grouped_factor
from projschub.matchings import SubsetP, subset_weight_sum
from projschub.models import (
    PuzzleEncoding,
    TableauEncoding,
    enumerate_model_objects,
    puzzle_weight,
    tableau_weight,
    verify_model_sum,
)
from projschub.newton import DomainError
from projschub.polyring import Family, Polynomial, beta_to_t, t_diff


def test_puzzle_weights():
    assert puzzle_weight(PuzzleEncoding(2, 3, SubsetP(2, (1, 2)))) == t_diff(1, 4) * t_diff(2, 4)
    assert puzzle_weight(PuzzleEncoding(2, 3, SubsetP(2, ()))) == Polynomial.one(Family.T)
    assert puzzle_weight(PuzzleEncoding(3, 2, SubsetP(3, (1, 3)))) == t_diff(1, 3) * t_diff(3, 4)


def test_tableau_weights():
    t = TableauEncoding(3, 4, 5, SubsetP(3, (1, 3)))
    assert tableau_weight(t) == t_diff(1, 5) * t_diff(3, 6)
    assert t.edge_labels() == {1: 1, 3: 2}
    assert tableau_weight(TableauEncoding(2, 3, 5, SubsetP(2, ()))) == Polynomial.one(Family.T)
    assert tableau_weight(TableauEncoding(4, 3, 5, SubsetP(4, (2, 3)))) == t_diff(2, 5) * t_diff(3, 5)


def test_invalid_encodings():
    with pytest.raises(ValueError):
        TableauEncoding(3, 4, 5, SubsetP(3, (1,)))
    with pytest.raises(ValueError):
        PuzzleEncoding(3, 1, SubsetP(3, (1, 2)))


def test_enumeration_counts():
    assert len(enumerate_model_objects(2, 3, 3, "puzzle")) == 1
    assert len(enumerate_model_objects(3, 2, 3, "puzzle")) == 3
    assert len(enumerate_model_objects(3, 4, 5, "tableau")) == 3
    assert enumerate_model_objects(3, 4, 8, "tableau") == []
    with pytest.raises(ValueError):
        enumerate_model_objects(1, 1, 1, "hive")


def test_enumerators_agree_on_subsets():
    for i in range(6):
        for j in range(6):
            for k in range(max(i, j), i + j + 1):
                pz = [z.P for z in enumerate_model_objects(i, j, k, "puzzle")]
                tb = [t.P for t in enumerate_model_objects(i, j, k, "tableau")]
                assert pz == tb


def test_swapped_puzzle_identity():
    one = sum((puzzle_weight(z) for z in enumerate_model_objects(2, 3, 3, "puzzle")), Polynomial.zero(Family.T))
    three = sum((puzzle_weight(z) for z in enumerate_model_objects(3, 2, 3, "puzzle")), Polynomial.zero(Family.T))
    assert one == t_diff(1, 4) * t_diff(2, 4)
    assert three == t_diff(1, 3) * t_diff(2, 3) + t_diff(1, 3) * t_diff(3, 4) + t_diff(2, 4) * t_diff(3, 4)
    assert one == three


def test_verify_model_sum():
    assert verify_model_sum(2, 3, 3, "puzzle").ok
    assert verify_model_sum(2, 3, 5, "tableau").ok
    assert verify_model_sum(3, 4, 5, "tableau").ok
    with pytest.raises(DomainError):
        verify_model_sum(3, 4, 8, "puzzle")


@pytest.mark.parametrize("i", range(7))
@pytest.mark.parametrize("j", range(7))
def test_per_subset_correspondence(i, j):
    for r in range(min(i, j) + 1):
        k = i + j - r
        for ps in combinations(range(1, i + 1), r):
            P = SubsetP(i, ps)
            pw = puzzle_weight(PuzzleEncoding(i, j, P))
            tw = tableau_weight(TableauEncoding(i, j, k, P))
            assert pw == tw == beta_to_t(subset_weight_sum(i, j, P)) == grouped_factor(P, j)
        for kind in ("puzzle", "tableau"):
            assert verify_model_sum(i, j, k, kind).ok
        assert coefficient_via_explicit(i, j, k) == sum(
            (tableau_weight(t) for t in enumerate_model_objects(i, j, k, "tableau")),
            Polynomial.zero(Family.T),
        )
