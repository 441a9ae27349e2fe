"""Integer sequences used throughout: binomials, Stirling, Eulerian and
weighted Lah numbers, plus cyclic classes of compositions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .polynomial import DuplicateNodeError, RationalPolynomial, interpolate

__all__ = [
    "Composition",
    "DuplicateNodeError",
    "RationalPolynomial",
    "binomial",
    "enumerate_gamma",
    "eulerian",
    "interpolate",
    "stirling_first_unsigned",
    "weighted_lah",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 whenever k < 0 or n < k.

    Note that this deliberately differs from the generalized binomial for
    negative ``n``: every negative ``n`` with ``k >= 0`` gives 0.
    """
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind, by the row recurrence."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return (n - 1) * stirling_first_unsigned(n - 1, k) + stirling_first_unsigned(n - 1, k - 1)


@lru_cache(maxsize=None)
def eulerian(m: int, k: int) -> int:
    """Eulerian number A(m, k): permutations of [m] with exactly k descents.

    With this indexing A(m, 0) = 1 and A(m, 1) = 2**m - m - 1.  A(0, 0) = 1.
    """
    if m < 0 or k < 0 or k >= max(m, 1):
        return 0
    if m == 0:
        return 1
    return (k + 1) * eulerian(m - 1, k) + (m - k) * eulerian(m - 1, k - 1)


def weighted_lah(l: int, n: int, m: int) -> int:
    """Weighted Lah number W(l, n, m) from its alternating double sum."""
    if m > n:
        raise ValueError(f"weighted_lah requires m <= n, got m={m}, n={n}")
    if l < 0 or n < 1 or m < 1:
        raise ValueError(f"weighted_lah requires l >= 0 and n, m >= 1, got {(l, n, m)}")
    total = 0
    for j in range(l + 1):
        for i in range(n - m + 1):
            term = (
                binomial(n, j)
                * binomial(m + l - j - 1, m - 1)
                * stirling_first_unsigned(j, j - i)
                * stirling_first_unsigned(n - j, m + i - j)
            )
            total += -term if (i + j) % 2 else term
    return total


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive parts, viewed up to cyclic rotation."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def rotations(self) -> set[tuple[int, ...]]:
        p = self.parts
        return {p[i:] + p[:i] for i in range(len(p))}

    @property
    def class_size(self) -> int:
        """Number of distinct cyclic rotations, d(sigma)."""
        return len(self.rotations())

    @property
    def period_sum(self) -> int:
        """Sum of one least period, n * d / l."""
        num = self.total * self.class_size
        assert num % self.length == 0
        return num // self.length

    def canonical(self) -> "Composition":
        return Composition(min(self.rotations()))


def enumerate_gamma(n: int) -> list[Composition]:
    """Lex-minimal representatives of the cyclic classes of compositions of
    ``n`` having at least two parts, all parts >= 2.  Sorted, deterministic."""
    if n < 1:
        raise ValueError("n must be positive")
    reps = set()
    for length in range(2, n // 2 + 1):
        for parts in _compositions_min_part(n, length, 2):
            comp = Composition(parts)
            reps.add(comp.canonical().parts)
    return [Composition(p) for p in sorted(reps)]


def _compositions_min_part(n: int, length: int, least: int):
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(least, n - least * (length - 1) + 1):
        for rest in _compositions_min_part(n - first, length - 1, least):
            yield (first,) + rest
