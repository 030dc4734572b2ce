import math
from itertools import combinations

import pytest

import oracle
from helpers import B, T
from projschub.formulas import (
    INFINITY,
    coefficient_via_explicit,
    coefficient_via_recurrence,
    expand_product,
    grouped_factor,
    in_window,
    multiply_expansions,
    pieri_expand,
)
from projschub.matchings import SubsetP, coefficient_via_matchings, subset_weight_sum
from projschub.polyring import Family, Polynomial, beta_to_t, t_diff

ONE = Polynomial.one(Family.T)


def test_pieri():
    assert pieri_expand(2, 4).coeffs == {3: ONE, 2: t_diff(1, 3)}
    assert pieri_expand(0, 4).coeffs == {1: ONE}
    assert pieri_expand(4, 4).coeffs == {4: t_diff(1, 5)}
    with pytest.raises(ValueError):
        pieri_expand(5, 4)


def test_recurrence_examples():
    assert coefficient_via_recurrence(1, 3, 3) == t_diff(1, 4)
    assert coefficient_via_recurrence(0, 5, 5) == ONE
    assert coefficient_via_recurrence(0, 5, 4).is_zero()
    assert coefficient_via_recurrence(2, 3, 3) == t_diff(1, 4) * t_diff(2, 4)


def test_explicit_examples():
    assert coefficient_via_explicit(2, 3, 3) == t_diff(1, 4) * t_diff(2, 4)
    assert coefficient_via_explicit(3, 4, 7) == ONE
    c = coefficient_via_explicit(1, 2, 2)
    assert c == t_diff(1, 3)
    assert beta_to_t(B({(1,): 1, (2,): 1})) == c


def test_grouped_factor():
    assert grouped_factor(SubsetP(3, (1, 3)), 4) == t_diff(1, 5) * t_diff(3, 6)
    assert grouped_factor(SubsetP(3, ()), 4) == ONE
    assert grouped_factor(SubsetP(2, (1, 2)), 3) == t_diff(1, 4) * t_diff(2, 4)
    with pytest.raises(ValueError):
        grouped_factor(SubsetP(4, (1, 2, 3)), 2)


@pytest.mark.parametrize("i", range(6))
@pytest.mark.parametrize("j", range(6))
def test_explicit_against_brute_force(i, j):
    for k in range(i + j + 2):
        assert coefficient_via_explicit(i, j, k) == T(dict(oracle.explicit_t(i, j, k)))


@pytest.mark.parametrize("i", range(7))
@pytest.mark.parametrize("j", range(7))
def test_grouped_identity_per_subset(i, j):
    for r in range(min(i, j) + 1):
        for ps in combinations(range(1, i + 1), r):
            P = SubsetP(i, ps)
            assert beta_to_t(subset_weight_sum(i, j, P)) == grouped_factor(P, j)


def test_expand_product():
    assert expand_product(1, 3, 5).coeffs == {4: ONE, 3: t_diff(1, 4)}
    assert expand_product(0, 3, 4).coeffs == {3: ONE}
    res = expand_product(2, 4, INFINITY, Family.BETA)
    assert res[4] == B(
        {(1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 2): 1, (2, 3): 2, (2, 4): 2, (3, 3): 1, (3, 4): 2, (4, 4): 1}
    )
    assert res[6] == Polynomial.one(Family.BETA)
    with pytest.raises(ValueError):
        expand_product(3, 2, 2)


def test_expansion_invariants():
    for n in range(7):
        for i in range(n + 1):
            for j in range(n + 1):
                res = expand_product(i, j, n)
                assert set(res.coeffs) == {k for k in range(n + 1) if in_window(i, j, k, n)}
                if i + j <= n:
                    assert res[i + j] == ONE


def test_multiply_by_sigma0_is_identity():
    left = {2: t_diff(1, 3), 3: ONE}
    assert multiply_expansions(left, 0, 6) == left
    assert multiply_expansions(left, 0, 6, side="left") == left


def test_small_associativity():
    lhs = multiply_expansions(multiply_expansions({1: ONE}, 2, 6), 3, 6)
    rhs = multiply_expansions(multiply_expansions({2: ONE}, 3, 6), 1, 6, side="left")
    assert lhs == rhs


def test_sigma1_cubed_in_p2():
    # sigma_1^2 = sigma_2 + (t_1 - t_2) sigma_1; times sigma_1 again in P^2:
    # sigma_2 coefficient: (t_1 - t_3) + (t_1 - t_2)
    sq = multiply_expansions({1: ONE}, 1, 2)
    assert sq == {2: ONE, 1: t_diff(1, 2)}
    cube = multiply_expansions(sq, 1, 2, side="left")
    assert cube[2] == t_diff(1, 3) + t_diff(1, 2)
    assert cube[2] == coefficient_via_recurrence(1, 2, 2) + t_diff(1, 2) * coefficient_via_recurrence(1, 1, 2)
    assert cube[1] == t_diff(1, 2) * t_diff(1, 2)


def test_window_and_saturation():
    for i in range(5):
        for j in range(5):
            for k in range(10):
                for N in range(1, 4):
                    assert in_window(i, j, k) == in_window(N * i, N * j, N * k)


def test_truncation_is_post_filter():
    full = expand_product(3, 3, INFINITY)
    for n in range(3, 8):
        part = expand_product(3, 3, n)
        assert part.coeffs == {k: c for k, c in full.coeffs.items() if k <= n}
    assert math.isinf(full.n)


def test_beta_route_matches_t_route():
    for i in range(5):
        for j in range(5):
            tb = expand_product(i, j, INFINITY, Family.BETA)
            tt = expand_product(i, j, INFINITY, Family.T)
            assert {k: beta_to_t(c) for k, c in tb.coeffs.items()} == tt.coeffs
            assert all(c == coefficient_via_matchings(i, j, k) for k, c in tb.coeffs.items())
