"""Schubert matroids SM_n(S): set / indicator / block encodings and the
brute-force matroid predicates used to cross-check the counting engine.

A Schubert matroid is handled either as its defining set ``S`` (a sorted
tuple of positive integers whose maximum is the ground size ``n``) or as the
run-length block sequence ``r = (r_1, ..., r_2m)`` of its 0/1 indicator.
"""
from __future__ import annotations

import enum
import re
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

SchubertSet = tuple[int, ...]
RSequence = tuple[int, ...]


class UVBounds(NamedTuple):
    u: tuple[int, ...]
    v: tuple[int, ...]


def schubert_set(elements: Iterable[int]) -> SchubertSet:
    """Validate and normalise a Schubert set to a sorted tuple."""
    s = tuple(sorted(int(x) for x in elements))
    if not s:
        raise ValueError("a Schubert set must be nonempty")
    if s[0] < 1:
        raise ValueError(f"Schubert set elements must be positive: {s}")
    if len(set(s)) != len(s):
        raise ValueError(f"duplicate elements in {s}")
    return s


def rsequence(blocks: Iterable[int]) -> RSequence:
    """Validate an r-sequence: even length, r_1 >= 0, later blocks > 0."""
    r = tuple(int(x) for x in blocks)
    if len(r) < 2 or len(r) % 2:
        raise ValueError(f"r-sequence must have positive even length: {r}")
    if r[0] < 0 or any(x <= 0 for x in r[1:]):
        raise ValueError(f"r-sequence needs r_1 >= 0 and r_i > 0 for i >= 2: {r}")
    return r


def ground_size(r: Sequence[int]) -> int:
    return sum(r)


def rank_of(r: Sequence[int]) -> int:
    """|S| = sum of the even-indexed (1-run) blocks."""
    return sum(r[1::2])


def indicator(S: Iterable[int]) -> tuple[int, ...]:
    s = schubert_set(S)
    members = set(s)
    return tuple(1 if i in members else 0 for i in range(1, s[-1] + 1))


def set_to_rsequence(S: Iterable[int]) -> RSequence:
    """Run-length encode the indicator vector, starting with a (possibly empty) 0-run."""
    bits = indicator(S)
    runs = []
    current, length = 0, 0
    for b in bits:
        if b == current:
            length += 1
        else:
            runs.append(length)
            current, length = b, 1
    runs.append(length)
    return rsequence(runs)


def rsequence_to_set(r: Sequence[int]) -> SchubertSet:
    r = rsequence(r)
    out = []
    pos = 0
    for i, block in enumerate(r):
        if i % 2:
            out.extend(range(pos + 1, pos + block + 1))
        pos += block
    return tuple(out)


def uv_bounds(r: Sequence[int]) -> UVBounds:
    r = rsequence(r)
    m = len(r) // 2
    zeros = r[0::2]
    ones = r[1::2]
    u = tuple(min(zeros[i], sum(ones[i + 1 :])) for i in range(m))
    v = tuple(min(ones[i], sum(zeros[:i])) for i in range(m))
    return UVBounds(u, v)


def dual_rsequence(r: Sequence[int]) -> RSequence:
    """Block sequence of the dual matroid, with trailing loops dropped.

    Reversing ``r`` swaps the roles of 0- and 1-runs.  When ``r_1 = 0`` the
    reversed indicator ends in a 0-run (loops of the dual); those are removed,
    which leaves the lattice-point counts unchanged.
    """
    r = rsequence(r)
    rev = tuple(reversed(r))
    if r[0] > 0:
        return rev
    if len(r) == 2:
        raise ValueError(f"dual of {r} has rank 0 and no Schubert encoding")
    return rsequence(rev[:-2])


# -- parsing ---------------------------------------------------------------

_INT_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def parse_set(text: str) -> SchubertSet:
    """Parse a literal such as ``"{2,6,7,10}"``."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if not _INT_LIST.match(body):
        raise ValueError(f"cannot parse set literal {text!r}")
    return schubert_set(int(x) for x in body.split(","))


def parse_rsequence(text: str) -> RSequence:
    """Parse a literal such as ``"1,1,3,2,2,1"``."""
    body = text.strip().strip("()")
    if not _INT_LIST.match(body):
        raise ValueError(f"cannot parse r-sequence literal {text!r}")
    return rsequence(int(x) for x in body.split(","))


# -- matroid predicates ----------------------------------------------------


def _checked_subset(S: SchubertSet, T: Iterable[int]) -> tuple[int, ...]:
    n = S[-1]
    t = tuple(sorted(set(int(x) for x in T)))
    if t and (t[0] < 1 or t[-1] > n):
        raise ValueError(f"subset {t} is not contained in [1..{n}]")
    return t


def is_basis(S: Iterable[int], T: Iterable[int]) -> bool:
    """``T <= S`` in the componentwise (Gale) order on sorted sets of equal size."""
    s = schubert_set(S)
    t = _checked_subset(s, T)
    return len(t) == len(s) and all(a <= b for a, b in zip(t, s))


def is_independent(S: Iterable[int], I: Iterable[int]) -> bool:
    """Alignment test: sorted ``I`` is dominated by the ``|I|`` largest elements of ``S``."""
    s = schubert_set(S)
    i = _checked_subset(s, I)
    if len(i) > len(s):
        return False
    top = s[len(s) - len(i) :]
    return all(a <= b for a, b in zip(i, top))


def rank(S: Iterable[int], T: Iterable[int]) -> int:
    """Greedy matching of ``T`` (largest first) into slots of ``S`` with ``t <= s``."""
    s = schubert_set(S)
    t = _checked_subset(s, T)
    free = list(s)
    matched = 0
    for x in reversed(t):
        # largest unmatched slot; any slot >= x serves every smaller element too
        if free and free[-1] >= x:
            free.pop()
            matched += 1
    return matched


def bases(S: Iterable[int]) -> list[tuple[int, ...]]:
    """All bases of SM_n(S), by enumerating |S|-subsets of [n]."""
    s = schubert_set(S)
    n = s[-1]
    return [t for t in combinations(range(1, n + 1), len(s)) if all(a <= b for a, b in zip(t, s))]


class SubsetKind(enum.Flag):
    OTHER = 0
    INDEPENDENT = enum.auto()
    BASIS = enum.auto()
    CIRCUIT = enum.auto()
    FLAT = enum.auto()
    HYPERPLANE = enum.auto()
    CIRCUIT_HYPERPLANE = CIRCUIT | HYPERPLANE


def classify_subset(S: Iterable[int], T: Iterable[int]) -> SubsetKind:
    s = schubert_set(S)
    t = _checked_subset(s, T)
    n = s[-1]
    kind = SubsetKind.OTHER
    if is_independent(s, t):
        kind |= SubsetKind.INDEPENDENT
        if len(t) == len(s):
            kind |= SubsetKind.BASIS
    elif all(is_independent(s, sub) for sub in combinations(t, len(t) - 1)):
        kind |= SubsetKind.CIRCUIT
    rk = rank(s, t)
    members = set(t)
    if all(rank(s, t + (a,)) > rk for a in range(1, n + 1) if a not in members):
        kind |= SubsetKind.FLAT
        if rk == len(s) - 1:
            kind |= SubsetKind.HYPERPLANE
    return kind


def circuit_hyperplanes(S: Iterable[int]) -> list[tuple[int, ...]]:
    s = schubert_set(S)
    return [
        t
        for t in combinations(range(1, s[-1] + 1), len(s))
        if SubsetKind.CIRCUIT_HYPERPLANE in classify_subset(s, t)
    ]


def is_sparse_paving(S: Iterable[int]) -> bool:
    """Every rank-sized subset is a basis or a circuit-hyperplane (brute force)."""
    s = schubert_set(S)
    for t in combinations(range(1, s[-1] + 1), len(s)):
        kind = classify_subset(s, t)
        if SubsetKind.BASIS in kind:
            continue
        if SubsetKind.CIRCUIT_HYPERPLANE not in kind:
            return False
    return True


def sparse_paving_pattern(r: Sequence[int]) -> bool:
    """Closed-form characterisation of sparse paving Schubert matroids.

    True for the uniform blocks ``(n-k, k)`` and for ``(k-1, 1, 1, n-k-1)``
    with ``k >= 1`` and ``n-k-1 >= 1``.
    """
    r = rsequence(r)
    if len(r) == 2:
        return True
    return len(r) == 4 and r[1] == 1 and r[2] == 1 and r[3] >= 1
