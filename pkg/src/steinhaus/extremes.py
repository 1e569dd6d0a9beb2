"""Extreme weights, balanced triangles and the weight enumerator of S(n).

Exhaustive searches run over all ``2**n`` seeds at once with numpy: the
seeds of a contiguous range are held as a ``uint64`` array and every row of
every triangle is produced by the same shift-and-XOR used in
:mod:`steinhaus.core`.  Ranges are independent, so their partial counts can
be computed in any order (or in parallel) and summed.
"""
from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from steinhaus.core import BinarySequence, triangle_weight, unit_vector

__all__ = [
    "BudgetExceeded",
    "DEFAULT_DISTRIBUTION_MAX_N",
    "DEFAULT_VERIFY_MAX_N",
    "MaxWeight",
    "WeightEnumerator",
    "balanced_search",
    "balanced_target",
    "max_weight",
    "max_weight_search",
    "minimum_positive_weight",
    "partial_distribution",
    "seed_weights",
    "verify_max_weight",
    "weight_distribution",
    "z_sequence",
]

DEFAULT_DISTRIBUTION_MAX_N = 24
DEFAULT_VERIFY_MAX_N = 18
# seeds per numpy batch; keeps peak memory around 16 MB per worker
CHUNK = 1 << 20
MAX_WORD_N = 63

Z_PATTERNS = {"z1": "110", "z2": "101", "z3": "011"}


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed the size or time budget."""


class _Clock:
    def __init__(self, budget_seconds: Optional[float]):
        self.deadline = None if budget_seconds is None else time.monotonic() + budget_seconds

    def check(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("wall-clock budget exhausted")


def _check_budget(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n or n > MAX_WORD_N:
        raise BudgetExceeded(f"n={n} exceeds the exhaustive budget n <= {min(max_n, MAX_WORD_N)}")


def seed_weights(n: int, start: int, stop: int) -> np.ndarray:
    """Triangle weights of the seeds ``start .. stop-1`` (packed, bit i = x_i)."""
    v = np.arange(start, stop, dtype=np.uint64)
    w = np.zeros(v.shape, dtype=np.int64)
    one = np.uint64(1)
    for length in range(n, 0, -1):
        w += np.bitwise_count(v)
        v = (v ^ (v >> one)) & np.uint64((1 << (length - 1)) - 1)
    return w


def _ranges(n: int, chunk: int = CHUNK) -> Iterator[tuple[int, int]]:
    total = 1 << n
    for start in range(0, total, chunk):
        yield start, min(start + chunk, total)


def partial_distribution(n: int, start: int, stop: int) -> Counter:
    """Weight counts restricted to seeds ``start .. stop-1``."""
    counts = np.bincount(seed_weights(n, start, stop))
    return Counter({int(w): int(c) for w, c in enumerate(counts) if c})


@dataclass(frozen=True)
class WeightEnumerator:
    """Number of seeds in F_2^n per triangle weight."""

    size: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def min_positive(self) -> Optional[int]:
        positive = [w for w in self.counts if w > 0]
        return min(positive) if positive else None

    def max_weight(self) -> int:
        return max(self.counts)

    def check(self) -> None:
        """Raise AssertionError unless the enumerator invariants hold."""
        n = self.size
        assert self.total == 1 << n, "counts do not sum to 2^n"
        assert self.counts.get(0) == 1, "weight 0 must be attained exactly once"
        assert not any(0 < w < n for w in self.counts), "weight strictly between 0 and n"

    def to_csv(self) -> str:
        lines = ["weight,count"] + [f"{w},{c}" for w, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({str(w): c for w, c in sorted(self.counts.items())})


def weight_distribution(
    n: int,
    max_n: int = DEFAULT_DISTRIBUTION_MAX_N,
    budget_seconds: Optional[float] = None,
    workers: int = 1,
) -> WeightEnumerator:
    """Exact weight enumerator of all ``2**n`` triangles of size ``n``."""
    _check_budget(n, max_n)
    clock = _Clock(budget_seconds)
    total: Counter = Counter()
    ranges = list(_ranges(n))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            futures = [pool.submit(partial_distribution, n, a, b) for a, b in ranges]
            for fut in futures:
                clock.check()
                total.update(fut.result())
    else:
        for a, b in ranges:
            clock.check()
            total.update(partial_distribution(n, a, b))
    enum = WeightEnumerator(n, dict(sorted(total.items())))
    enum.check()
    return enum


def z_sequence(variant: str | int, n: int) -> BinarySequence:
    """First ``n`` terms of the periodic pattern 110 (z1), 101 (z2) or 011 (z3)."""
    key = f"z{variant}" if isinstance(variant, int) else variant
    if key not in Z_PATTERNS:
        raise ValueError(f"unknown z-sequence {variant!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    pattern = Z_PATTERNS[key]
    return BinarySequence.from_bits(int(pattern[i % 3]) for i in range(n))


@dataclass(frozen=True)
class MaxWeight:
    value: int
    generators: frozenset[BinarySequence]


def max_weight(n: int) -> MaxWeight:
    """Harborth's stated maximum weight and generating seeds (no search).

    ``n(n+1)/3`` from z1, z2, z3 when ``n % 3 in (0, 2)``; ``(n^2+n+1)/3``
    from z1, z3 when ``n % 3 == 1``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 3 == 1:
        return MaxWeight((n * n + n + 1) // 3, frozenset(z_sequence(v, n) for v in ("z1", "z3")))
    return MaxWeight(n * (n + 1) // 3, frozenset(z_sequence(v, n) for v in ("z1", "z2", "z3")))


def _as_sequences(n: int, seeds: np.ndarray) -> list[BinarySequence]:
    return [BinarySequence(int(s), n) for s in seeds]


def max_weight_search(
    n: int, max_n: int = DEFAULT_VERIFY_MAX_N, budget_seconds: Optional[float] = None
) -> MaxWeight:
    """Maximum triangle weight and every seed attaining it, by exhaustive search."""
    _check_budget(n, max_n)
    clock = _Clock(budget_seconds)
    best = -1
    winners: list[BinarySequence] = []
    for a, b in _ranges(n):
        clock.check()
        w = seed_weights(n, a, b)
        top = int(w.max())
        if top < best:
            continue
        hits = _as_sequences(n, np.nonzero(w == top)[0].astype(np.uint64) + np.uint64(a))
        if top > best:
            best, winners = top, hits
        else:
            winners.extend(hits)
    return MaxWeight(best, frozenset(winners))


def verify_max_weight(
    n: int, max_n: int = DEFAULT_VERIFY_MAX_N, budget_seconds: Optional[float] = None
) -> bool:
    """True iff exhaustive search confirms both the value and generator set of
    :func:`max_weight`."""
    return max_weight_search(n, max_n, budget_seconds) == max_weight(n)


def balanced_target(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 4 not in (0, 3):
        raise ValueError(f"n(n+1)/4 is not an integer for n={n}; need n = 0, 3 (mod 4)")
    return n * (n + 1) // 4


def balanced_search(
    n: int,
    mode: str = "first",
    max_n: int = DEFAULT_DISTRIBUTION_MAX_N,
    budget_seconds: Optional[float] = None,
) -> BinarySequence | list[BinarySequence] | int | None:
    """Seeds whose triangle has weight ``n(n+1)/4``.

    ``mode="first"`` returns the numerically smallest packed witness (or
    None), ``"all"`` every witness in packed order, ``"count"`` their number.
    """
    if mode not in ("first", "all", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    target = balanced_target(n)
    _check_budget(n, max_n)
    clock = _Clock(budget_seconds)
    found: list[BinarySequence] = []
    count = 0
    for a, b in _ranges(n):
        clock.check()
        idx = np.nonzero(seed_weights(n, a, b) == target)[0]
        if mode == "count":
            count += int(idx.size)
            continue
        if idx.size:
            hits = _as_sequences(n, idx.astype(np.uint64) + np.uint64(a))
            if mode == "first":
                return hits[0]
            found.extend(hits)
    if mode == "count":
        return count
    if mode == "first":
        return None
    return found


@dataclass(frozen=True)
class MinimumWeight:
    value: int
    witnesses: frozenset[BinarySequence]
    verified: bool


def minimum_positive_weight(
    n: int, max_n: int = DEFAULT_DISTRIBUTION_MAX_N, budget_seconds: Optional[float] = None
) -> MinimumWeight:
    """Smallest nonzero triangle weight, which is ``n``.

    Witnesses always include ``e_0`` and ``e_{n-1}``.  When ``n`` is within
    the exhaustive budget every witness is listed and the value is checked
    against the full search; otherwise ``verified`` is False.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    known = {unit_vector(0, n), unit_vector(n - 1, n)}
    if any(triangle_weight(x) != n for x in known):
        raise AssertionError("e_0 / e_{n-1} do not have weight n")
    if n > min(max_n, MAX_WORD_N):
        return MinimumWeight(n, frozenset(known), False)
    clock = _Clock(budget_seconds)
    witnesses: set[BinarySequence] = set()
    smallest = None
    for a, b in _ranges(n):
        clock.check()
        w = seed_weights(n, a, b)
        positive = w[w > 0]
        if positive.size:
            low = int(positive.min())
            smallest = low if smallest is None else min(smallest, low)
        witnesses.update(_as_sequences(n, np.nonzero(w == n)[0].astype(np.uint64) + np.uint64(a)))
    if smallest != n or not known <= witnesses:
        raise AssertionError(f"minimum positive weight for n={n} is {smallest}, not {n}")
    return MinimumWeight(n, frozenset(witnesses), True)
