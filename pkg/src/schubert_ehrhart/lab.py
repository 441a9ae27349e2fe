"""Parameter scans for the positivity conjectures, the coefficientwise
sparse-paving bounds, and the identity regression suite.

Conjectures are scanned, never asserted: a clean report only says that no
counterexample exists in the scanned range.

Positivity convention: a polynomial counts as *positive* when every
coefficient of ``t^1 .. t^d`` is > 0 and the constant term is >= 0.  The
constant term is allowed to vanish because every difference scanned here
(and ``F(a, b, +-1, t)``) is 0 at ``t = 0``; such points are flagged with
``"vanishing_constant": true``.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable

from . import ehrhart as eh
from .combinatorics import stirling_first_unsigned, weighted_lah
from .polynomial import RationalPolynomial
from .schubert import dual_rsequence, set_to_rsequence

POSITIVE = "positive"
NONPOSITIVE = "nonpositive-coefficient-found"
UNSTABLE = "unstable-interpolation"


@dataclass
class ScanReport:
    name: str
    ranges: dict[str, Any]
    points: list[dict[str, Any]] = field(default_factory=list)
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    unstable: list[dict[str, Any]] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.unstable

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out = {
            "scan": self.name,
            "ranges": self.ranges,
            "ok": self.ok,
            "n_points": len(self.points),
            "n_counterexamples": len(self.counterexamples),
            "n_unstable": len(self.unstable),
            "counterexamples": self.counterexamples,
            "unstable": self.unstable,
            "points": self.points,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)


def fraction_json(x: Fraction) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def polynomial_json(p: RationalPolynomial) -> list[dict[str, str]]:
    return [fraction_json(c) for c in p.coefficients]


def positivity(p: RationalPolynomial) -> tuple[str, dict[str, Any] | None]:
    """Verdict and, if not positive, the first offending coefficient."""
    coeffs = p.coefficients
    if not coeffs:
        return NONPOSITIVE, {"index": 0, "value": fraction_json(Fraction(0))}
    if coeffs[0] < 0:
        return NONPOSITIVE, {"index": 0, "value": fraction_json(coeffs[0])}
    for m, c in enumerate(coeffs[1:], start=1):
        if c <= 0:
            return NONPOSITIVE, {"index": m, "value": fraction_json(c)}
    if len(coeffs) == 1 and coeffs[0] == 0:
        return NONPOSITIVE, {"index": 0, "value": fraction_json(coeffs[0])}
    return POSITIVE, None


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- F(a, b, c, t) positivity ----------------------------------------------


def _f_point(params: tuple[int, int, int]) -> dict[str, Any]:
    a, b, c = params
    poly, stable = eh.f_stable_interpolant(a, b, c)
    point: dict[str, Any] = {"a": a, "b": b, "c": c, "fit_range": [abs(c), abs(c) + 2 * (a + b) - 1]}
    if not stable:
        point["verdict"] = UNSTABLE
        return point
    verdict, witness = positivity(poly)
    point["verdict"] = verdict
    point["vanishing_constant"] = poly.coefficient(0) == 0
    point["polynomial"] = polynomial_json(poly)
    if witness:
        point["witness"] = witness
    return point


def scan_f_positivity(max_a: int, max_b: int, max_c: int, jobs: int = 1) -> ScanReport:
    """Positivity of F(a, b, c, t) on 1 <= a <= max_a, 1 <= b <= max_b, |c| <= max_c.

    The expected pattern is positive exactly for c in {-1, 0, 1}; any point
    deviating from that is a counterexample.
    """
    if min(max_a, max_b, max_c) < 1:
        raise ValueError("scan bounds must be >= 1")
    start = time.perf_counter()
    grid = [
        (a, b, c)
        for a in range(1, max_a + 1)
        for b in range(1, max_b + 1)
        for c in range(-max_c, max_c + 1)
    ]
    report = ScanReport(
        "f-positivity",
        {"a": [1, max_a], "b": [1, max_b], "c": [-max_c, max_c]},
    )
    for point in _pmap(_f_point, grid, jobs):
        report.points.append(point)
        if point["verdict"] == UNSTABLE:
            report.unstable.append({k: point[k] for k in ("a", "b", "c")})
            continue
        expected = abs(point["c"]) <= 1
        if (point["verdict"] == POSITIVE) != expected:
            witness = {k: point[k] for k in ("a", "b", "c", "verdict")}
            witness["expected"] = POSITIVE if expected else NONPOSITIVE
            witness["polynomial"] = point["polynomial"]
            if "witness" in point:
                witness["coefficient"] = point["witness"]
            report.counterexamples.append(witness)
    report.elapsed_seconds = time.perf_counter() - start
    return report


# -- Catalan conjectures ---------------------------------------------------


def _catalan_point(params: tuple[str, int, int, int]) -> dict[str, Any]:
    which, n, a, b = params
    if which == "difference":
        poly = eh.catalan_difference_polynomial(n, a, b)
    else:
        poly = eh.catalan_bar_polynomial(n, a, b)
    verdict, witness = positivity(poly)
    point = {
        "conjecture": which,
        "n": n,
        "a": a,
        "b": b,
        "verdict": verdict,
        "vanishing_constant": poly.coefficient(0) == 0,
        "polynomial": polynomial_json(poly),
    }
    if witness:
        point["witness"] = witness
    return point


def scan_catalan_conjectures(max_n: int, max_a: int, max_b: int, jobs: int = 1) -> ScanReport:
    """Positivity of F(na, nb, 0, t) - F(a, b, 0, t)^n (n >= 2) and of the
    reduced Catalan polynomial i(C-bar_n) (n >= 1)."""
    if min(max_n, max_a, max_b) < 1:
        raise ValueError("scan bounds must be >= 1")
    start = time.perf_counter()
    grid = []
    for n in range(1, max_n + 1):
        for a in range(1, max_a + 1):
            for b in range(1, max_b + 1):
                if n >= 2:
                    grid.append(("difference", n, a, b))
                grid.append(("reduced", n, a, b))
    report = ScanReport("catalan", {"n": [1, max_n], "a": [1, max_a], "b": [1, max_b]})
    for point in _pmap(_catalan_point, grid, jobs):
        report.points.append(point)
        if point["verdict"] != POSITIVE:
            report.counterexamples.append(
                {k: point[k] for k in ("conjecture", "n", "a", "b", "witness")}
            )
    report.elapsed_seconds = time.perf_counter() - start
    return report


# -- sparse paving bounds --------------------------------------------------


def sparse_paving_polynomials(k: int, n: int):
    """(minimal, sparse paving, uniform) Ehrhart polynomials for the pair (k, n)."""
    lower = eh.ehrhart_polynomial(eh.minimal_rsequence(k, n))
    middle = eh.ehrhart_polynomial(eh.sparse_paving_rsequence(k, n))
    upper = eh.f_polynomial(n - k, k)
    return lower, middle, upper


def _bounds_point(params: tuple[int, int]) -> dict[str, Any]:
    k, n = params
    lower, middle, upper = sparse_paving_polynomials(k, n)
    problems = []
    for label, lo, hi in (("minimal<=sparse", lower, middle), ("sparse<=uniform", middle, upper)):
        diff = hi - lo
        for m in range(max(len(diff.coefficients), 1)):
            if diff.coefficient(m) < 0:
                problems.append({"bound": label, "index": m, "value": fraction_json(diff.coefficient(m))})
    verdict, witness = positivity(middle)
    if verdict != POSITIVE:
        problems.append({"bound": "sparse>0", **witness})
    strict = [
        m
        for m in range(len(upper.coefficients))
        if lower.coefficient(m) < middle.coefficient(m) or middle.coefficient(m) < upper.coefficient(m)
    ]
    return {
        "k": k,
        "n": n,
        "verdict": POSITIVE if not problems else NONPOSITIVE,
        "problems": problems,
        "strict_indices": strict,
        "minimal": polynomial_json(lower),
        "sparse_paving": polynomial_json(middle),
        "uniform": polynomial_json(upper),
    }


def check_sparse_paving_bounds(max_n: int, jobs: int = 1) -> ScanReport:
    """Coefficientwise i(T_{k,n}) <= i(Sp_{k,n}) <= i(U_{k,n}) and positivity of
    i(Sp_{k,n}) for 4 <= n <= max_n, 2 <= k <= n - 2."""
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    start = time.perf_counter()
    grid = [(k, n) for n in range(4, max_n + 1) for k in range(2, n - 1)]
    report = ScanReport("bounds", {"n": [4, max_n], "k": "2..n-2"})
    for point in _pmap(_bounds_point, grid, jobs):
        report.points.append(point)
        for problem in point["problems"]:
            report.counterexamples.append({"k": point["k"], "n": point["n"], **problem})
    report.elapsed_seconds = time.perf_counter() - start
    return report


# -- identity regression suite ---------------------------------------------


def _i4(a: int, b: int, c: int, d: int, t: int) -> int:
    """i((a,b,c,d), t) from the engine when the blocks are a valid r-sequence,
    otherwise from the single-sum formula (which allows zero blocks)."""
    if a >= 0 and min(b, c, d) > 0:
        return eh.count_dilation((a, b, c, d), t)
    return eh.four_block_count(a, b, c, d, t)


def _F(a, b, c, t):
    return eh.f_closed(a, b, c, t)


def _id_f_moves(P, T):
    for a in range(P + 1):
        for b in range(P + 1):
            if a + b == 0:
                continue
            for c in range(-P, P + 1):
                for t in range(T + 1):
                    yield ("symmetry", a, b, c, t), _F(a, b, c, t) == _F(b, a, -c, t)
                    if b >= 1:
                        yield ("shift", a, b, c, t), _F(a, b, c, t) == _F(a + 1, b - 1, c + t, t)
            for t in range(T + 1):
                yield ("column-sum", a, b, t), _F(a + 1, b, 0, t) == sum(
                    _F(a, b, -i, t) for i in range(t + 1)
                )


def _id_four_block(P, T):
    for a in range(P + 1):
        for b in range(1, P + 1):
            for c in range(1, P + 1):
                for d in range(1, P + 1):
                    for t in range(T + 1):
                        single = eh.four_block_count(a, b, c, d, t)
                        ok = single == eh.count_dilation((a, b, c, d), t)
                        if a >= 1:
                            ok = ok and single == eh.four_block_count(d, c, b, a, t)
                        yield (a, b, c, d, t), ok


def _id_pairing(P, T):
    for a in range(P + 1):
        for b in range(P + 1):
            for c in range(P + 1):
                for d in range(P + 1):
                    if a + b == 0 or c + d == 0:
                        continue
                    for t in range(T + 1):
                        lhs = eh.four_block_count(a, b, c, d, t) + eh.four_block_count(b, a, d, c, t)
                        rhs = _F(a + c, b + d, 0, t) + _F(a, b, 0, t) * _F(c, d, 0, t)
                        ok = lhs == rhs
                        if min(a, b, c, d) >= 1:
                            ok = ok and lhs == _i4(a, b, c, d, t) + _i4(b, a, d, c, t)
                        yield (a, b, c, d, t), ok


def _id_pairing_11ab(P, T):
    for a in range(1, P + 1):
        for b in range(1, P + 1):
            for t in range(T + 1):
                lhs = _i4(1, 1, a, b, t) + _i4(1, 1, b - 1, a + 1, t)
                yield (a, b, t), lhs == (t + 2) * _F(a + 1, b, 0, t)


def _id_special_shapes(P, T):
    for a in range(1, P + 1):
        for b in range(1, P + 1):
            for t in range(T + 1):
                fa = _F(a, b, 0, t)
                lhs = 2 * eh.count_dilation((a, b, a, b), t)
                yield ("abab", a, b, t), lhs == _F(2 * a, 2 * b, 0, t) + fa * fa
                lhs = 2 * eh.count_dilation((a, a, b, b), t)
                yield ("aabb", a, b, t), lhs == _F(a + b, a + b, 0, t) + _F(a, a, 0, t) * _F(b, b, 0, t)
        for t in range(T + 1):
            lhs = 2 * eh.count_dilation((1, 1, a, a + 1), t)
            yield ("11aa1", a, t), lhs == (t + 2) * _F(a + 1, a + 1, 0, t)


def _id_1137(P, T):
    for t in range(T + 1):
        rhs = (
            (t + 2) * (_F(4, 7, 0, t) + _F(5, 6, 0, t))
            - _F(7, 5, 0, t)
            - (t + 1) * _F(4, 6, 0, t)
            - Fraction(_F(6, 6, 0, t) + (t + 1) * _F(5, 5, 0, t), 2)
        )
        yield (t,), eh.count_dilation((1, 1, 3, 7), t) == rhs


def _id_minimal(P, T):
    for n in range(3, P + 1):
        for k in range(2, n):
            for t in range(T + 1):
                direct = eh.minimal_count_sum(k, n, t)
                ok = direct == eh.minimal_count_closed(k, n, t)
                r = eh.minimal_rsequence(k, n) if n - k >= 2 else (1, k)
                ok = ok and direct == eh.count_dilation(r, t)
                yield (k, n, t), ok


def _id_sparse_difference(P, T):
    for n in range(4, P + 1):
        for k in range(2, n - 1):
            for t in range(T + 1):
                sp = eh.count_dilation(eh.sparse_paving_rsequence(k, n), t)
                ok = sp == eh.count_dilation(eh.sparse_paving_rsequence(n - k, n), t)
                shifted = eh.minimal_count_sum(k, n, t - 1) if t >= 1 else 0
                ok = ok and sp == eh.uniform_count(k, n, t) - shifted
                yield (k, n, t), ok


def _id_stirling_rows(P, T):
    for n in range(1, P + 1):
        for m in range(1, n + 1):
            rhs = sum(
                stirling_first_unsigned(j, m) * (_factorial(n) // _factorial(j)) for j in range(n + 1)
            )
            yield (n, m), stirling_first_unsigned(n + 1, m + 1) == rhs


def _factorial(x: int) -> int:
    import math

    return math.factorial(x)


def _id_lah_first(P, T):
    for n in range(1, P + 1):
        for m in range(0, n):
            rhs = (m + 1) * stirling_first_unsigned(n, m + 1) - n * stirling_first_unsigned(n - 1, m)
            yield (n, m), weighted_lah(1, n, m + 1) == rhs


def _id_lah(P, T):
    for n in range(1, P + 1):
        for m in range(1, n + 1):
            yield ("stirling", n, m), weighted_lah(0, n, m) == stirling_first_unsigned(n, m)
            for l in range(0, n - m + 1):
                w = weighted_lah(l, n, m)
                yield ("reflection", l, n, m), w >= 0 and w == weighted_lah(n - m - l, n, m)


def _id_uniform_coeffs(P, T):
    for n in range(2, P + 1):
        for k in range(1, n):
            poly = eh.f_polynomial(n - k, k)
            for m in range(n):
                yield (k, n, m), eh.uniform_coefficient(k, n, m) == poly.coefficient(m)


def _id_rank2_minimum(P, T):
    for n in range(6, P + 1):
        low = eh.f_polynomial(n - 2, 2)
        for k in range(3, n // 2 + 1):
            yield (k, n), low.dominated_by(eh.f_polynomial(n - k, k))


def _id_duality(P, T):
    for n in range(1, P + 1):
        for size in range(n):
            for rest in combinations(range(1, n), size):
                r = set_to_rsequence(rest + (n,))
                if len(r) == 2 and r[0] == 0:
                    continue
                d = dual_rsequence(r)
                for t in range(T + 1):
                    yield (r, t), eh.count_dilation(r, t) == eh.count_dilation(d, t)


def _id_low_rank(P, T):
    for a in range(1, P + 1):
        for b in range(1, P + 1):
            for t in range(T + 1):
                yield ("rank2", a, b, t), eh.rank2_count(a, b, t) == eh.count_dilation((a, 1, b, 1), t)
                for c in range(1, P + 1):
                    yield ("rank3", a, b, c, t), eh.rank3_count(a, b, c, t) == eh.count_dilation(
                        (a, 1, b, 1, c, 1), t
                    )


# name -> (generator, default parameter bound, default t bound)
IDENTITIES: dict[str, tuple[Callable, int, int]] = {
    "f-symmetry-shift-sum": (_id_f_moves, 5, 8),
    "four-block-sum": (_id_four_block, 3, 4),
    "four-block-pairing": (_id_pairing, 3, 6),
    "pairing-11ab": (_id_pairing_11ab, 5, 8),
    "pairing-special-shapes": (_id_special_shapes, 3, 12),
    "shape-1137": (_id_1137, 0, 8),
    "minimal-closed-form": (_id_minimal, 10, 8),
    "sparse-paving-difference": (_id_sparse_difference, 9, 6),
    "stirling-row-sum": (_id_stirling_rows, 12, 0),
    "lah-first-weight": (_id_lah_first, 10, 0),
    "weighted-lah": (_id_lah, 7, 0),
    "uniform-coefficients": (_id_uniform_coeffs, 8, 0),
    "uniform-rank2-minimum": (_id_rank2_minimum, 10, 0),
    "duality": (_id_duality, 7, 3),
    "rank2-rank3": (_id_low_rank, 3, 4),
}


def _run_identity(args: tuple[str, int | None, int | None]) -> dict[str, Any]:
    name, param_budget, t_budget = args
    gen, P, T = IDENTITIES[name]
    if param_budget is not None and P:
        P = min(P, param_budget)
    if t_budget is not None:
        T = min(T, t_budget)
    count, failures = 0, []
    for params, ok in gen(P, T):
        count += 1
        if not ok:
            failures.append({"identity": name, "params": _jsonable(params)})
    return {"identity": name, "param_bound": P, "t_bound": T, "instances": count, "failures": failures}


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


def run_identity_suite(
    param_budget: int | None = None,
    t_budget: int | None = None,
    names: Iterable[str] | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Evaluate every registered identity over its grid.

    ``param_budget`` and ``t_budget`` cap the default grids (``None`` keeps
    the defaults).  Each point of the report summarises one identity.
    """
    if (param_budget is not None and param_budget < 1) or (t_budget is not None and t_budget < 1):
        raise ValueError("budgets must be >= 1")
    start = time.perf_counter()
    selected = list(IDENTITIES) if names is None else list(names)
    unknown = [n for n in selected if n not in IDENTITIES]
    if unknown:
        raise KeyError(f"unknown identities: {unknown}")
    report = ScanReport("identities", {"param_budget": param_budget, "t_budget": t_budget})
    for summary in _pmap(_run_identity, [(n, param_budget, t_budget) for n in selected], jobs):
        failures = summary.pop("failures")
        summary["failures"] = len(failures)
        report.points.append(summary)
        report.counterexamples.extend(failures)
    report.elapsed_seconds = time.perf_counter() - start
    return report


__all__ = [
    "IDENTITIES",
    "NONPOSITIVE",
    "POSITIVE",
    "ScanReport",
    "UNSTABLE",
    "check_sparse_paving_bounds",
    "positivity",
    "run_identity_suite",
    "scan_catalan_conjectures",
    "scan_f_positivity",
]
