"""Binomial coefficients modulo a prime via Lucas's theorem.

``C(r, s) mod p`` is the product of the small binomials of the aligned base-p
digits of ``r`` and ``s``.  For ``p = 2`` this collapses to a bit test:
``C(r, s)`` is odd iff ``s & ~r == 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, isqrt

__all__ = [
    "DigitExpansion",
    "PrimeModulus",
    "binom_mod_p",
    "binom_parity",
    "digits",
    "entry",
    "is_prime",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % d for d in range(3, isqrt(p) + 1, 2))


@lru_cache(maxsize=None)
def _small_binomials(p: int) -> tuple[tuple[int, ...], ...]:
    # table[a][b] = C(a, b) mod p for 0 <= a, b < p; zero when b > a
    return tuple(tuple(comb(a, b) % p for b in range(p)) for a in range(p))


# warm the table for the primes the library uses routinely
for _p in (2, 3, 5, 7, 11):
    _small_binomials(_p)


@dataclass(frozen=True)
class PrimeModulus:
    p: int
    table: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")
        object.__setattr__(self, "table", _small_binomials(self.p))


@dataclass(frozen=True)
class DigitExpansion:
    """Canonical base-``base`` expansion, least significant digit first."""

    value: int
    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if sum(d * self.base**i for i, d in enumerate(self.digits)) != self.value:
            raise ValueError("digits do not reproduce value")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("expansion is not canonical")


def digits(value: int, base: int) -> DigitExpansion:
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if value < 0:
        raise ValueError(f"value must be nonnegative, got {value}")
    out = []
    v = value
    while v:
        v, d = divmod(v, base)
        out.append(d)
    return DigitExpansion(value, base, tuple(out))


def binom_mod_p(r: int, s: int, p: PrimeModulus | int) -> int:
    """``C(r, s) mod p`` by Lucas's theorem; 0 when ``s > r``."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    if not isinstance(p, PrimeModulus):
        p = PrimeModulus(p)
    if s > r:
        return 0
    table = p.table
    prime = p.p
    result = 1
    while s:
        r, a = divmod(r, prime)
        s, b = divmod(s, prime)
        result = result * table[a][b] % prime
        if not result:
            return 0
    return result


def binom_parity(r: int, s: int) -> int:
    """``C(r, s) mod 2``: 1 iff the binary digits of ``s`` sit under those of ``r``."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    return int(s & ~r == 0)


def entry(k: int, n: int, r: int, c: int) -> int:
    """Entry ``(r, c)`` of the triangle seeded by ``e_k`` of length ``n``.

    Equals ``C(r, k - c) mod 2``, and 0 whenever ``c > k``.
    """
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")
    if not 0 <= r < n:
        raise ValueError(f"row {r} outside triangle of size {n}")
    if not 0 <= c < n - r:
        raise ValueError(f"column {c} outside row {r} of a size-{n} triangle")
    if c > k:
        return 0
    return binom_parity(r, k - c)
