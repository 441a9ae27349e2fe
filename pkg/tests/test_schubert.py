from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from schubert_ehrhart.ehrhart import count_dilation
from schubert_ehrhart.schubert import (
    SubsetKind,
    bases,
    circuit_hyperplanes,
    classify_subset,
    dual_rsequence,
    indicator,
    is_basis,
    is_independent,
    is_sparse_paving,
    parse_rsequence,
    parse_set,
    rank,
    rsequence,
    rsequence_to_set,
    set_to_rsequence,
    sparse_paving_pattern,
    uv_bounds,
)

from conftest import all_sets


def gale_bases(S):
    """Bases straight from the definition: |S|-subsets T with T <= S elementwise."""
    n = max(S)
    S = sorted(S)
    return [T for T in combinations(range(1, n + 1), len(S)) if all(a <= b for a, b in zip(T, S))]


def runs(bits):
    out, cur, length = [], 0, 0
    for b in bits:
        if b == cur:
            length += 1
        else:
            out.append(length)
            cur, length = b, 1
    out.append(length)
    return tuple(out)


sets_strategy = st.integers(1, 8).flatmap(
    lambda n: st.sets(st.integers(1, n - 1) if n > 1 else st.nothing(), max_size=n - 1).map(
        lambda rest: tuple(sorted(rest | {n}))
    )
)


class TestEncoding:
    def test_examples(self):
        assert set_to_rsequence({2, 6, 7, 10}) == (1, 1, 3, 2, 2, 1)
        assert set_to_rsequence({3, 6, 8}) == (2, 1, 2, 1, 1, 1)
        assert set_to_rsequence({1}) == (0, 1)
        assert indicator({3, 6, 8}) == (0, 0, 1, 0, 0, 1, 0, 1)

    @given(sets_strategy)
    def test_roundtrip(self, S):
        r = set_to_rsequence(S)
        assert rsequence_to_set(r) == S
        assert sum(r) == max(S)
        assert sum(r[1::2]) == len(S)

    def test_invalid(self):
        for bad in [(), (1,), (1, 0), (-1, 2), (1, 2, 0, 1)]:
            with pytest.raises(ValueError):
                rsequence(bad)
        with pytest.raises(ValueError):
            parse_set("{1,x}")
        with pytest.raises(ValueError):
            parse_set("{0,2}")
        assert parse_set("{2, 6,7,10}") == (2, 6, 7, 10)
        assert parse_rsequence("1,1,3,2,2,1") == (1, 1, 3, 2, 2, 1)

    def test_uv(self):
        assert uv_bounds((2, 1, 2, 1, 1, 1)) == ((2, 1, 0), (0, 1, 1))
        assert uv_bounds((3, 2)) == ((0,), (0,))
        assert uv_bounds((1, 1, 1, 1)) == ((1, 0), (0, 1))


class TestPredicates:
    def test_examples(self):
        assert is_basis({2, 4}, {1, 3})
        assert not is_basis({2, 4}, {3, 4})
        assert is_basis({2, 4}, {2, 4})
        assert is_independent({2, 4}, {3})
        assert not is_independent({2, 4}, {3, 4})
        assert is_independent({2, 4}, ())
        assert rank({2, 4}, {3, 4}) == 1
        assert rank({2, 6, 7, 10}, range(1, 11)) == 4
        assert rank({2, 4}, ()) == 0
        assert len(bases({2, 4})) == 5

    @pytest.mark.parametrize("S", list(all_sets(1, 6)))
    def test_against_basis_enumeration(self, S):
        B = gale_bases(S)
        assert bases(S) == B
        n = max(S)
        for size in range(n + 1):
            for T in combinations(range(1, n + 1), size):
                assert rank(S, T) == max(len(set(T) & set(b)) for b in B)
                assert is_independent(S, T) == any(set(T) <= set(b) for b in B)

    def test_classify(self):
        kind = classify_subset({2, 4}, {3, 4})
        assert SubsetKind.CIRCUIT_HYPERPLANE in kind
        assert SubsetKind.BASIS in classify_subset({2, 4}, {1, 3})
        assert SubsetKind.BASIS in classify_subset({2, 4}, {1, 2})
        assert circuit_hyperplanes({2, 4, 5}) == [(3, 4, 5)]


class TestSparsePaving:
    def test_examples(self):
        assert is_sparse_paving({2, 4, 5})
        assert not is_sparse_paving({2, 6, 7, 10})
        assert is_sparse_paving({3}) and sparse_paving_pattern((2, 1))

    @pytest.mark.parametrize("S", list(all_sets(1, 7)))
    def test_pattern_matches_brute_force(self, S):
        assert is_sparse_paving(S) == sparse_paving_pattern(set_to_rsequence(S))


class TestDual:
    def test_examples(self):
        assert dual_rsequence((1, 1, 1, 1)) == (1, 1, 1, 1)
        assert dual_rsequence((2, 1)) == (1, 2)
        r = (1, 1, 3, 2, 2, 1)
        bits = indicator(rsequence_to_set(r))
        flipped = tuple(1 - b for b in reversed(bits))
        assert dual_rsequence(r) == runs(flipped)
        with pytest.raises(ValueError):
            dual_rsequence((0, 3))

    @pytest.mark.parametrize("S", [S for S in all_sets(2, 6) if len(S) < max(S)])
    def test_dual_counts(self, S):
        r = set_to_rsequence(S)
        d = dual_rsequence(r)
        assert sum(d[1::2]) == sum(r) - sum(r[1::2])
        for t in range(3):
            assert count_dilation(r, t) == count_dilation(d, t)
