from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from schubert_ehrhart.ehrhart import count_dilation, f_closed
from schubert_ehrhart.oracles import (
    Budget,
    BudgetExceeded,
    Diagram,
    divided_difference,
    f_bruteforce,
    key_polynomial,
    kohnert_closure,
    kohnert_monomial_count,
    kohnert_moves,
    kohnert_polynomial,
    lattice_points,
    lattice_points_direct,
    skyline,
)
from schubert_ehrhart.schubert import indicator, set_to_rsequence

KAPPA_021 = {(0, 2, 1): 1, (1, 1, 1): 1, (1, 2, 0): 1, (2, 0, 1): 1, (2, 1, 0): 1}


class TestDiagrams:
    def test_skyline(self):
        d = skyline((1, 3, 0, 2))
        assert len(d) == 6
        assert set(d) == {(1, 1), (2, 1), (2, 2), (2, 3), (4, 1), (4, 2)}
        assert len(skyline((0, 0, 0))) == 0
        assert set(skyline((0, 2, 1))) == {(2, 1), (2, 2), (3, 1)}
        with pytest.raises(ValueError):
            Diagram(frozenset({(0, 1)}))

    def test_moves(self):
        succ = kohnert_moves(skyline((0, 2, 1)))
        assert succ == {
            Diagram(frozenset({(2, 1), (1, 2), (3, 1)})),
            Diagram(frozenset({(2, 1), (2, 2), (1, 1)})),
        }
        assert kohnert_moves(Diagram(frozenset())) == set()
        assert kohnert_moves(Diagram(frozenset({(1, 1)}))) == set()

    def test_closure(self):
        assert len(kohnert_closure((0, 2, 1))) == 5
        assert len(kohnert_closure((3, 2, 2, 0))) == 1
        assert len(kohnert_closure((0, 1))) == 2
        assert kohnert_polynomial((0, 2, 1)) == KAPPA_021
        assert kohnert_monomial_count((0, 2, 1)) == 5
        assert kohnert_monomial_count((0, 1, 0, 1)) == 5
        assert kohnert_monomial_count((0, 2)) == 3

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            kohnert_closure((5, 5, 5))
        assert len(kohnert_closure((0, 2, 1), Budget(max_boxes=3))) == 5


class TestKeys:
    def test_examples(self):
        assert key_polynomial((0, 2, 1)) == KAPPA_021
        assert key_polynomial((3, 1, 0)) == {(3, 1, 0): 1}
        assert key_polynomial((0, 1)) == {(1, 0): 1, (0, 1): 1}

    def test_choice_independent(self):
        for alpha in product(range(3), repeat=4):
            assert key_polynomial(alpha, "first") == key_polynomial(alpha, "last")

    def test_divided_difference(self):
        # d_1(x_1^2) = x_1 + x_2
        assert divided_difference({(2, 0): 1}, 0) == {(1, 0): 1, (0, 1): 1}
        assert divided_difference({(1, 1): 1}, 0) == {}

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=1, max_size=4))
    def test_kohnert_equals_key(self, alpha):
        assert kohnert_polynomial(alpha) == key_polynomial(alpha)


class TestLattice:
    def test_examples(self):
        assert lattice_points_direct({2, 4}, 1) == 5
        assert lattice_points_direct({2, 6, 7}, 0) == 1
        assert lattice_points_direct({3, 6, 8}, 1) == count_dilation((2, 1, 2, 1, 1, 1), 1)
        pts = lattice_points({2, 4}, 1)
        assert sorted(map(tuple, pts.tolist())) == [(0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0)]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            lattice_points_direct({9}, 1)
        with pytest.raises(BudgetExceeded):
            lattice_points_direct({2}, 9)

    def test_f_bruteforce(self):
        assert f_bruteforce(2, 2, 0, 2) == 19
        assert f_bruteforce(1, 1, 0, 3) == 4
        assert f_bruteforce(2, 1, 5, 2) == 0
        with pytest.raises(BudgetExceeded):
            f_bruteforce(6, 6, 0, 5)

    @pytest.mark.parametrize("S", [(2, 5), (1, 3, 5), (3, 4), (2, 4, 5)])
    def test_kohnert_agrees_with_lattice(self, S):
        for t in range(3):
            alpha = [t * x for x in indicator(S)]
            assert kohnert_monomial_count(alpha) == lattice_points_direct(S, t)
            assert count_dilation(set_to_rsequence(S), t) == lattice_points_direct(S, t)

    def test_f_matches_closed(self):
        for a, b, c, t in product(range(3), range(3), range(-3, 4), range(4)):
            if a + b:
                assert f_bruteforce(a, b, c, t) == f_closed(a, b, c, t)
