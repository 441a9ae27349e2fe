from __future__ import annotations

import json
from fractions import Fraction

import pytest

from schubert_ehrhart import ehrhart as eh
from schubert_ehrhart.lab import (
    IDENTITIES,
    NONPOSITIVE,
    POSITIVE,
    check_sparse_paving_bounds,
    positivity,
    run_identity_suite,
    scan_catalan_conjectures,
    scan_f_positivity,
)
from schubert_ehrhart.polynomial import RationalPolynomial


def test_positivity_rule():
    assert positivity(RationalPolynomial([1, 2]))[0] == POSITIVE
    assert positivity(RationalPolynomial([0, 2]))[0] == POSITIVE
    verdict, witness = positivity(RationalPolynomial([-1, 1]))
    assert verdict == NONPOSITIVE and witness == {"index": 0, "value": {"num": "-1", "den": "1"}}
    assert positivity(RationalPolynomial([1, 0, 1]))[1]["index"] == 1
    assert positivity(RationalPolynomial([]))[0] == NONPOSITIVE


class TestFScan:
    def test_small_scan(self):
        report = scan_f_positivity(2, 2, 3)
        assert report.ok
        assert len(report.points) == 2 * 2 * 7
        assert len({(p["a"], p["b"], p["c"]) for p in report.points}) == len(report.points)
        point = next(p for p in report.points if (p["a"], p["b"], p["c"]) == (1, 1, 2))
        assert point["verdict"] == NONPOSITIVE
        assert point["witness"] == {"index": 0, "value": {"num": "-1", "den": "1"}}
        assert next(p for p in report.points if (p["a"], p["b"], p["c"]) == (2, 2, 1))["verdict"] == POSITIVE

    def test_parallel_is_deterministic(self):
        assert scan_f_positivity(2, 3, 2, jobs=2).to_json() == scan_f_positivity(2, 3, 2).to_json()

    def test_bounds_checked(self):
        with pytest.raises(ValueError):
            scan_f_positivity(0, 1, 1)


class TestCatalanScan:
    def test_scan(self):
        report = scan_catalan_conjectures(3, 2, 2)
        assert report.ok
        kinds = {(p["conjecture"], p["n"]) for p in report.points}
        assert ("difference", 1) not in kinds and ("reduced", 1) in kinds
        assert ("difference", 3) in kinds and ("reduced", 3) in kinds

    def test_n_two_difference(self):
        t = RationalPolynomial.variable()
        diff = eh.catalan_difference_polynomial(2, 1, 1)
        assert diff == (t + 1) * (2 * t * t + 4 * t + 3) / 3 - (t + 1) ** 2
        assert diff.coefficients == (0, Fraction(1, 3), 1, Fraction(2, 3))


class TestBounds:
    def test_scan(self):
        report = check_sparse_paving_bounds(7)
        assert report.ok
        by_kn = {(p["k"], p["n"]): p for p in report.points}
        assert by_kn[(2, 4)]["minimal"] == by_kn[(2, 4)]["sparse_paving"]
        assert by_kn[(2, 5)]["strict_indices"]

    def test_bounds_checked(self):
        with pytest.raises(ValueError):
            check_sparse_paving_bounds(3)


class TestIdentitySuite:
    def test_default(self):
        report = run_identity_suite()
        assert report.ok
        assert [p["identity"] for p in report.points] == list(IDENTITIES)
        assert all(p["instances"] > 0 for p in report.points)

    def test_budgets_shrink(self):
        small = run_identity_suite(2, 2)
        full = run_identity_suite()
        for a, b in zip(small.points, full.points):
            assert a["instances"] <= b["instances"]
        with pytest.raises(ValueError):
            run_identity_suite(0, None)

    def test_named_instances(self):
        t = 3
        assert eh.count_dilation((1, 1, 1, 2), t) == eh.uniform_count(2, 5, t) - eh.minimal_count(2, 5, t - 1)
        assert eh.f_polynomial(6, 2).dominated_by(eh.f_polynomial(4, 4))

    def test_failure_is_reported(self, monkeypatch):
        import schubert_ehrhart.lab as lab

        def broken(P, T):
            yield (1,), True
            yield (2,), False

        monkeypatch.setitem(lab.IDENTITIES, "broken", (broken, 1, 1))
        report = run_identity_suite(names=["broken"])
        assert not report.ok
        assert report.counterexamples == [{"identity": "broken", "params": [2]}]
        assert json.loads(report.to_json())["n_counterexamples"] == 1
