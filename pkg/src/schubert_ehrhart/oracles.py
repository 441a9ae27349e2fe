"""Independent ground truth for the path-sum engine.

Three routes that never touch the offset-path formula:

* Kohnert diagrams of the skyline ``D(t * indicator(S))``: their distinct row
  weights are the lattice points of the dilated polytope.
* Key polynomials from divided differences, to check the Kohnert generator.
* Direct enumeration of integer points satisfying the rank inequalities.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .schubert import rank, schubert_set

Monomial = tuple[int, ...]
MultivariatePolynomial = dict[Monomial, int]


class BudgetExceeded(RuntimeError):
    """An oracle was asked for an instance larger than its configured budget."""


@dataclass(frozen=True)
class Budget:
    max_boxes: int = 12
    max_n: int = 8
    max_t: int = 4
    max_tuples: int = 5_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Diagram:
    """A finite set of ``(row, column)`` cells, rows numbered from the top."""

    cells: frozenset

    def __post_init__(self):
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        if any(i < 1 or j < 1 for i, j in cells):
            raise ValueError("diagram coordinates must be positive")
        object.__setattr__(self, "cells", cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def row_counts(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for i, _ in self.cells:
            counts[i - 1] += 1
        return tuple(counts)

    @classmethod
    def _from_columns(cls, columns: Sequence[int]) -> "Diagram":
        cells = []
        for j, mask in enumerate(columns, start=1):
            i = 1
            while mask:
                if mask & 1:
                    cells.append((i, j))
                mask >>= 1
                i += 1
        return cls(frozenset(cells))

    def _columns(self) -> tuple[int, ...]:
        width = max((j for _, j in self.cells), default=0)
        cols = [0] * width
        for i, j in self.cells:
            cols[j - 1] |= 1 << (i - 1)
        return tuple(cols)


def skyline(alpha: Sequence[int]) -> Diagram:
    """First ``alpha_i`` cells of row ``i``."""
    if any(a < 0 for a in alpha):
        raise ValueError("skyline entries must be nonnegative")
    return Diagram(frozenset((i, j) for i, a in enumerate(alpha, start=1) for j in range(1, a + 1)))


def _moves(columns: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Kohnert moves on a diagram stored as per-column row bitmasks."""
    rightmost: dict[int, int] = {}
    for j, mask in enumerate(columns):
        row = 0
        while mask:
            if mask & 1:
                rightmost[row] = j
            mask >>= 1
            row += 1
    out = []
    for row, j in rightmost.items():
        col = columns[j]
        target = row - 1
        while target >= 0 and col >> target & 1:
            target -= 1
        if target < 0:
            continue
        moved = col & ~(1 << row) | (1 << target)
        out.append(columns[:j] + (moved,) + columns[j + 1 :])
    return out


def kohnert_moves(diagram: Diagram) -> set[Diagram]:
    """Diagrams reachable from ``diagram`` by exactly one Kohnert move."""
    return {Diagram._from_columns(c) for c in _moves(diagram._columns())}


def _closure_columns(alpha: Sequence[int], budget: Budget) -> set[tuple[int, ...]]:
    boxes = sum(alpha)
    if boxes > budget.max_boxes:
        raise BudgetExceeded(f"skyline of {tuple(alpha)} has {boxes} boxes > budget {budget.max_boxes}")
    start = skyline(alpha)._columns()
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in _moves(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def kohnert_closure(alpha: Sequence[int], budget: Budget = DEFAULT_BUDGET) -> set[Diagram]:
    """All Kohnert diagrams of the skyline of ``alpha`` (breadth-first, deduplicated)."""
    return {Diagram._from_columns(c) for c in _closure_columns(alpha, budget)}


def _weight(columns: tuple[int, ...], n: int) -> tuple[int, ...]:
    counts = [0] * n
    for mask in columns:
        row = 0
        while mask:
            if mask & 1:
                counts[row] += 1
            mask >>= 1
            row += 1
    return tuple(counts)


def kohnert_polynomial(alpha: Sequence[int], budget: Budget = DEFAULT_BUDGET) -> MultivariatePolynomial:
    """Sum of x^D over the Kohnert diagrams of ``alpha``, with multiplicities."""
    n = len(alpha)
    poly: MultivariatePolynomial = {}
    for cols in _closure_columns(alpha, budget):
        w = _weight(cols, n)
        poly[w] = poly.get(w, 0) + 1
    return poly


def kohnert_monomial_count(alpha: Sequence[int], budget: Budget = DEFAULT_BUDGET) -> int:
    """Number of distinct monomials x^D over the Kohnert diagrams of ``alpha``."""
    return len(kohnert_polynomial(alpha, budget))


# -- key polynomials by divided differences --------------------------------


class DivisionRemainderError(ArithmeticError):
    """A divided difference left a nonzero remainder (internal inconsistency)."""


def _swap(e: Monomial, i: int) -> Monomial:
    e = list(e)
    e[i], e[i + 1] = e[i + 1], e[i]
    return tuple(e)


def divided_difference(poly: MultivariatePolynomial, i: int) -> MultivariatePolynomial:
    """(f - s_i f) / (x_i - x_{i+1}) with 0-based ``i``, by exact long division."""
    numer: MultivariatePolynomial = dict(poly)
    for e, c in poly.items():
        s = _swap(e, i)
        numer[s] = numer.get(s, 0) - c
    numer = {e: c for e, c in numer.items() if c}
    quotient: MultivariatePolynomial = {}
    while True:
        lead = max((e for e in numer if e[i] > 0), key=lambda e: (e[i], e), default=None)
        if lead is None:
            break
        c = numer[lead]
        q = list(lead)
        q[i] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + c
        # subtract c * x^q * (x_i - x_{i+1})
        numer[lead] -= c
        if not numer[lead]:
            del numer[lead]
        other = list(q)
        other[i + 1] += 1
        other = tuple(other)
        numer[other] = numer.get(other, 0) + c
        if not numer[other]:
            del numer[other]
    if numer:
        raise DivisionRemainderError(f"nonzero remainder dividing by x_{i + 1} - x_{i + 2}")
    return {e: c for e, c in quotient.items() if c}


def key_polynomial(alpha: Sequence[int], choose: str = "first") -> MultivariatePolynomial:
    """Key polynomial of the weak composition ``alpha``.

    At each step an ascent ``alpha_i < alpha_{i+1}`` is chosen, the smallest
    (``choose="first"``) or largest (``"last"``); the answer does not depend
    on the choice.
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("key polynomial needs a weak composition")
    if choose not in ("first", "last"):
        raise ValueError("choose must be 'first' or 'last'")
    return dict(_key(alpha, choose))


@lru_cache(maxsize=None)
def _key(alpha: tuple[int, ...], choose: str) -> tuple[tuple[Monomial, int], ...]:
    ascents = [i for i in range(len(alpha) - 1) if alpha[i] < alpha[i + 1]]
    if not ascents:
        return ((alpha, 1),)
    i = ascents[0] if choose == "first" else ascents[-1]
    prev = dict(_key(_swap(alpha, i), choose))
    shifted = {}
    for e, c in prev.items():
        e = list(e)
        e[i] += 1
        shifted[tuple(e)] = c
    return tuple(sorted(divided_difference(shifted, i).items()))


# -- direct lattice-point counting -----------------------------------------


def _grid(n: int, t: int) -> np.ndarray:
    axes = np.meshgrid(*([np.arange(t + 1, dtype=np.int64)] * n), indexing="ij")
    return np.stack(axes, axis=-1).reshape(-1, n)


def lattice_points(S: Iterable[int], t: int, budget: Budget = DEFAULT_BUDGET) -> np.ndarray:
    """Integer points of ``t * P(SM_n(S))`` as rows of an array (lex order).

    Points are the vectors in ``[0, t]^n`` with total ``t * |S|`` obeying
    ``sum_{i in T} x_i <= t * rank(T)`` for every proper subset ``T``.
    """
    s = schubert_set(S)
    n = s[-1]
    if n > budget.max_n or t > budget.max_t:
        raise BudgetExceeded(f"n={n}, t={t} exceeds budget (n <= {budget.max_n}, t <= {budget.max_t})")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return np.zeros((1, n), dtype=np.int64)
    pts = _grid(n, t)
    pts = pts[pts.sum(axis=1) == t * len(s)]
    subsets = [T for size in range(1, n) for T in combinations(range(1, n + 1), size)]
    if subsets:
        mask = np.zeros((len(subsets), n), dtype=np.int64)
        for row, T in enumerate(subsets):
            mask[row, [x - 1 for x in T]] = 1
        bound = np.array([t * rank(s, T) for T in subsets], dtype=np.int64)
        pts = pts[(pts @ mask.T <= bound).all(axis=1)]
    return pts


def lattice_points_direct(S: Iterable[int], t: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Count of :func:`lattice_points`."""
    return int(lattice_points(S, t, budget).shape[0])


@lru_cache(maxsize=None)
def _sum_histogram(length: int, t: int) -> tuple[int, ...]:
    sums = _grid(length, t).sum(axis=1)
    return tuple(int(x) for x in np.bincount(sums, minlength=length * t + 1))


def f_bruteforce(a: int, b: int, c: int, t: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Count vectors in ``[0, t]^(a+b)`` with sum ``b*t + c`` by full enumeration."""
    if a < 0 or b < 0 or a + b < 1 or t < 0:
        raise ValueError(f"invalid F arguments {(a, b, c, t)}")
    if (t + 1) ** (a + b) > budget.max_tuples:
        raise BudgetExceeded(f"(t+1)^(a+b) = {(t + 1) ** (a + b)} > {budget.max_tuples}")
    hist = _sum_histogram(a + b, t)
    target = b * t + c
    return hist[target] if 0 <= target < len(hist) else 0
