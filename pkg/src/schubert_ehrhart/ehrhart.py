"""Lattice-point counts of dilated Schubert matroid polytopes.

The count ``i(r, t)`` is a weighted sum over offset paths
``c = (c_1, ..., c_m)``: each block pair ``(r_{2j-1}, r_{2j})`` contributes
``F(r_{2j-1}, r_{2j}, c_j, t)``, the number of vectors in ``[0, t]^(a+b)``
with coordinate sum ``b*t + c``.  Paths start and end at height 0, never go
below 0, and step ``j`` is confined to ``[-t*v_j, t*u_j]``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .combinatorics import (
    binomial,
    enumerate_gamma,
    eulerian,
    interpolate,
    weighted_lah,
)
from .polynomial import RationalPolynomial
from .schubert import ground_size, rsequence, uv_bounds

PathVector = tuple[int, ...]


def _check_ab(a: int, b: int) -> None:
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError(f"F needs a, b >= 0 with a + b >= 1, got a={a}, b={b}")


@lru_cache(maxsize=None)
def f_closed(a: int, b: int, c: int, t: int) -> int:
    """F(a, b, c, t) by the alternating binomial sum."""
    _check_ab(a, b)
    if t < 0:
        raise ValueError("t must be nonnegative")
    s = a + b
    total = 0
    for j in range(s + 1):
        term = binomial(s, j) * binomial((t + 1) * (b - j) + a + c - 1, s - 1)
        total += -term if j % 2 else term
    return total


def f_generating_function(a: int, b: int, c: int, t: int) -> int:
    """Coefficient of x^(b*t + c) in (1 + x + ... + x^t)^(a+b)."""
    _check_ab(a, b)
    if t < 0:
        raise ValueError("t must be nonnegative")
    target = b * t + c
    if target < 0 or target > (a + b) * t:
        return 0
    poly = [1]
    for _ in range(a + b):
        out = [0] * (len(poly) + t)
        for i, coeff in enumerate(poly):
            if coeff:
                for k in range(t + 1):
                    out[i + k] += coeff
        poly = out
    return poly[target]


def _path_data(r: Sequence[int], t: int):
    r = rsequence(r)
    if t < 0:
        raise ValueError("t must be nonnegative")
    u, v = uv_bounds(r)
    m = len(u)
    lo = [-t * x for x in v]
    hi = [t * x for x in u]
    # after step j the height must be able to return to 0 using the remaining down steps
    descent = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        descent[j] = descent[j + 1] + t * v[j]
    return r, m, lo, hi, descent


def iter_paths(r: Sequence[int], t: int) -> Iterator[PathVector]:
    """Depth-first enumeration of all admissible offset paths, in lex order."""
    r, m, lo, hi, descent = _path_data(r, t)

    def walk(j: int, height: int, prefix: tuple[int, ...]):
        if j == m:
            if height == 0:
                yield prefix
            return
        for c in range(max(lo[j], -height), hi[j] + 1):
            h = height + c
            if h > descent[j + 1]:
                break
            yield from walk(j + 1, h, prefix + (c,))

    yield from walk(0, 0, ())


def path_weight(r: Sequence[int], t: int, path: Sequence[int]) -> int:
    r = rsequence(r)
    w = 1
    for j, c in enumerate(path):
        w *= f_closed(r[2 * j], r[2 * j + 1], c, t)
        if not w:
            break
    return w


def count_dilation(r: Sequence[int], t: int) -> int:
    """Number of lattice points in the t-th dilate of P(SM_n(S)), S given by ``r``.

    Same search tree as :func:`iter_paths`, memoised on (step, height).
    """
    r, m, lo, hi, descent = _path_data(r, t)

    @lru_cache(maxsize=None)
    def walk(j: int, height: int) -> int:
        if j == m:
            return 1 if height == 0 else 0
        a, b = r[2 * j], r[2 * j + 1]
        total = 0
        for c in range(max(lo[j], -height), hi[j] + 1):
            h = height + c
            if h > descent[j + 1]:
                break
            rest = walk(j + 1, h)
            if rest:
                total += f_closed(a, b, c, t) * rest
        return total

    return walk(0, 0)


def ehrhart_polynomial(r: Sequence[int]) -> RationalPolynomial:
    """Interpolate :func:`count_dilation` at t = 0..n; the result has degree < n."""
    r = rsequence(r)
    n = ground_size(r)
    poly = interpolate([(t, count_dilation(r, t)) for t in range(n + 1)])
    if poly.degree >= n:
        raise ArithmeticError(f"Ehrhart interpolant for {r} has degree {poly.degree} >= n={n}")
    return poly


@lru_cache(maxsize=None)
def f_polynomial(a: int, b: int) -> RationalPolynomial:
    """F(a, b, 0, t) as a polynomial in t (the Ehrhart polynomial of U_{b, a+b})."""
    _check_ab(a, b)
    return interpolate([(t, f_closed(a, b, 0, t)) for t in range(a + b)])


# -- special families ------------------------------------------------------


def uniform_rsequence(k: int, n: int) -> tuple[int, int]:
    if not n > k >= 1:
        raise ValueError(f"uniform matroid needs n > k >= 1, got k={k}, n={n}")
    return (n - k, k)


def minimal_rsequence(k: int, n: int) -> tuple[int, int, int, int]:
    if not (n > k >= 2 and n - k - 1 >= 1):
        raise ValueError(f"minimal matroid needs n > k >= 2 and n - k >= 2, got k={k}, n={n}")
    return (1, k - 1, n - k - 1, 1)


def sparse_paving_rsequence(k: int, n: int) -> tuple[int, int, int, int]:
    if not (n > k >= 2 and n - k - 1 >= 1):
        raise ValueError(f"sparse paving family needs n > k >= 2 and n - k >= 2, got k={k}, n={n}")
    return (k - 1, 1, 1, n - k - 1)


def catalan_rsequence(n: int, a: int, b: int) -> tuple[int, ...]:
    if n < 1 or a < 1 or b < 1:
        raise ValueError(f"(a,b)-Catalan matroid needs n, a, b >= 1, got {(n, a, b)}")
    return (a, b) * n


def uniform_count(k: int, n: int, t: int) -> int:
    """i(U_{k,n}, t) = F(n-k, k, 0, t)."""
    a, b = uniform_rsequence(k, n)
    return f_closed(a, b, 0, t)


def uniform_coefficient(k: int, n: int, m: int) -> Fraction:
    """Coefficient of t^m in i(U_{k,n}, t) via weighted Lah and Eulerian numbers."""
    uniform_rsequence(k, n)
    if not 0 <= m <= n - 1:
        return Fraction(0)
    total = sum(weighted_lah(j, n, m + 1) * eulerian(m, k - j - 1) for j in range(k))
    return Fraction(total, math.factorial(n - 1))


def _check_minimal(k: int, n: int) -> None:
    if not n > k >= 2:
        raise ValueError(f"minimal matroid needs n > k >= 2, got k={k}, n={n}")


def minimal_count_sum(k: int, n: int, t: int) -> int:
    """i(T_{k,n}, t) as a single binomial-product sum over j = 0..t."""
    _check_minimal(k, n)
    return sum(binomial(j + n - k - 1, n - k - 1) * binomial(k + j - 1, j) for j in range(t + 1))


def minimal_count_closed(k: int, n: int, t: int) -> Fraction:
    """i(T_{k,n}, t) by the closed product formula (exact rational)."""
    _check_minimal(k, n)
    inner = sum(binomial(n - k + j - 1, j) * binomial(t + j, j) for j in range(k))
    return Fraction(binomial(t + n - k, n - k) * inner, binomial(n - 1, k - 1))


def minimal_count(k: int, n: int, t: int) -> int:
    """i(T_{k,n}, t); both closed forms are evaluated and must agree."""
    direct = minimal_count_sum(k, n, t)
    closed = minimal_count_closed(k, n, t)
    if closed != direct:
        raise ArithmeticError(f"minimal matroid formulas disagree at k={k}, n={n}, t={t}")
    return direct


@lru_cache(maxsize=None)
def minimal_polynomial(k: int, n: int) -> RationalPolynomial:
    return interpolate([(t, minimal_count_sum(k, n, t)) for t in range(n)])


def sparse_paving_count(k: int, n: int, t: int) -> int:
    """i(Sp_{k,n}, t), computed from the path sum and from U minus shifted T."""
    r = sparse_paving_rsequence(k, n)
    engine = count_dilation(r, t)
    via_bounds = uniform_count(k, n, t) - minimal_polynomial(k, n).evaluate_int(t - 1)
    if engine != via_bounds:
        raise ArithmeticError(f"sparse paving counts disagree at k={k}, n={n}, t={t}")
    return engine


def four_block_count(a: int, b: int, c: int, d: int, t: int) -> int:
    """i((a, b, c, d), t) as a single sum over the first offset."""
    return sum(f_closed(a, b, j, t) * f_closed(c, d, -j, t) for j in range(t * min(a, d) + 1))


def rank2_count(a: int, b: int, t: int) -> int:
    """i((a, 1, b, 1), t)."""
    if a < 1 or b < 1:
        raise ValueError("rank2_count needs a, b >= 1")
    return sum(f_closed(a, 1, j, t) * binomial(b + t - j, b) for j in range(t + 1))


def rank3_count(a: int, b: int, c: int, t: int) -> int:
    """i((a, 1, b, 1, c, 1), t) as a double sum: ``i = -c_3`` and ``j = c_1``.

    The first offset is a prefix of the path, so ``j`` starts at 0; letting it
    run from ``-i`` over-counts.
    """
    if a < 1 or b < 1 or c < 1:
        raise ValueError("rank3_count needs a, b, c >= 1")
    total = 0
    for i in range(t + 1):
        inner = sum(f_closed(a, 1, j, t) * f_closed(b, 1, i - j, t) for j in range(t + i + 1))
        total += binomial(t + c - i, c) * inner
    return total


# -- (a,b)-Catalan matroids ------------------------------------------------


@lru_cache(maxsize=None)
def catalan_polynomial(n: int, a: int, b: int) -> RationalPolynomial:
    """Ehrhart polynomial of the (a,b)-Catalan matroid by the cyclic-composition recursion."""
    catalan_rsequence(n, a, b)
    base = f_polynomial(a, b)
    if n == 1:
        return base
    result = (f_polynomial(n * a, n * b) - base**n) / n + base * catalan_polynomial(n - 1, a, b)
    for sigma in enumerate_gamma(n):
        term = RationalPolynomial([1])
        for part in sigma.parts:
            term = term * catalan_bar_polynomial(part, a, b)
        sign = -1 if sigma.length % 2 else 1
        result = result + term * Fraction(sign * sigma.class_size, sigma.length)
    return result


def catalan_bar_polynomial(n: int, a: int, b: int) -> RationalPolynomial:
    """i(C_n) - F(a,b,0,t) * i(C_{n-1}), with i(C_0) taken as 0."""
    current = catalan_polynomial(n, a, b)
    if n == 1:
        return current
    return current - f_polynomial(a, b) * catalan_polynomial(n - 1, a, b)


def catalan_difference_polynomial(n: int, a: int, b: int) -> RationalPolynomial:
    """F(na, nb, 0, t) - F(a, b, 0, t)^n."""
    return f_polynomial(n * a, n * b) - f_polynomial(a, b) ** n


# -- F off the c = 0 line --------------------------------------------------


def f_stable_interpolant(a: int, b: int, c: int) -> tuple[RationalPolynomial, bool]:
    """Polynomial agreeing with F(a, b, c, t) for t >= |c|.

    Interpolates at t = |c| .. |c| + a + b - 1 and re-checks ``a + b`` further
    points; the flag reports whether the re-check passed.
    """
    _check_ab(a, b)
    start = abs(c)
    width = a + b
    poly = interpolate([(t, f_closed(a, b, c, t)) for t in range(start, start + width)])
    stable = all(
        poly(t) == f_closed(a, b, c, t) for t in range(start + width, start + 2 * width)
    )
    return poly, stable
