"""Weights of triangles seeded by canonical basis vectors.

Write ``w(k, n)`` for the weight of ``T(e_k)`` with ``e_k`` of length ``n``.
For ``k >= 1`` let ``P = 2**t`` with ``t = k.bit_length()``, so
``P/2 <= k < P``.  Row ``P`` of ``T(e_k)`` is again a unit vector ``e_k``,
so stripping the top ``P`` rows leaves ``T(k, n - P)`` and

    w(k, n) = (q - 1) * lam + mu,   n = q*P + r,

where ``lam`` is the weight of the first ``P`` rows of ``T(k, k + 1 + P)``
and ``mu = w(k, r + P)``.  Both only depend on ``k`` (and ``r``), so they
are computed once by brute force and cached.

Caching uses :func:`functools.lru_cache`, which is safe under concurrent
use; a race may compute an entry twice but always stores the same value.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from steinhaus.core import partial_weight, triangle_weight, unit_vector
from steinhaus.quadratic import QSqrt2, cos_quarter_pi, sin_quarter_pi

__all__ = [
    "ClosedFormError",
    "ClosedFormSpec",
    "FastWeightBreakdown",
    "LambdaMuRow",
    "PAPER_CLOSED_FORMS",
    "closed_form_paper",
    "derive_closed_form",
    "lambda_mu_table",
    "lambda_of",
    "mu_of",
    "paper_amplitudes",
    "period_exponent",
    "recurrence_check",
    "weight_bruteforce",
    "weight_fast",
]

SNAP_TOLERANCE = 1e-9


class ClosedFormError(ArithmeticError):
    """A closed-form evaluation failed to produce an integer."""


def period_exponent(k: int) -> int:
    """``t = floor(log2 k) + 1``, so that ``2**(t-1) <= k < 2**t``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return k.bit_length()


def _check_index(k: int, n: int) -> None:
    if n < 1 or not 0 <= k < n:
        raise ValueError(f"need 0 <= k < n, got k={k}, n={n}")


def weight_bruteforce(k: int, n: int) -> int:
    _check_index(k, n)
    return triangle_weight(unit_vector(k, n))


@lru_cache(maxsize=None)
def lambda_of(k: int) -> int:
    """Weight added by each extra period of ``2**t`` rows."""
    period = 1 << period_exponent(k)
    return partial_weight(unit_vector(k, k + 1 + period), period)


@lru_cache(maxsize=None)
def _mu_row(k: int) -> tuple[int, ...]:
    period = 1 << period_exponent(k)
    return tuple(weight_bruteforce(k, r + period) for r in range(period))


def mu_of(k: int, r: int) -> int:
    period = 1 << period_exponent(k)
    if not 0 <= r < period:
        raise ValueError(f"remainder must lie in [0, {period}) for k={k}, got {r}")
    return _mu_row(k)[r]


@dataclass(frozen=True)
class FastWeightBreakdown:
    """Parameters of the period decomposition behind ``w(k, n)``.

    For ``k_effective == 0`` (seed ``e_0`` or ``e_{n-1}``) there is no period
    decomposition; ``applicable`` is False and the period fields are None.
    """

    k: int
    n: int
    k_effective: int
    t: Optional[int]
    period: Optional[int]
    q: Optional[int]
    r: Optional[int]
    lambda_: Optional[int]
    mu: Optional[int]
    weight: int

    @property
    def applicable(self) -> bool:
        return self.t is not None

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "k_effective": self.k_effective,
            "applicable": self.applicable,
            "t": self.t,
            "period": self.period,
            "q": self.q,
            "r": self.r,
            "lambda": self.lambda_,
            "mu": self.mu,
            "weight": self.weight,
        }


def weight_fast(k: int, n: int) -> FastWeightBreakdown:
    _check_index(k, n)
    k_eff = min(k, n - 1 - k)
    if k_eff == 0:
        return FastWeightBreakdown(k, n, 0, None, None, None, None, None, None, n)
    t = period_exponent(k_eff)
    period = 1 << t
    q, r = divmod(n, period)
    # n >= 2*k_eff + 1 >= period + 1, hence q >= 1
    lam = lambda_of(k_eff)
    mu = mu_of(k_eff, r)
    return FastWeightBreakdown(k, n, k_eff, t, period, q, r, lam, mu, (q - 1) * lam + mu)


@dataclass(frozen=True)
class LambdaMuRow:
    k: int
    t: int
    lambda_: int
    mu: tuple[int, ...]


def lambda_mu_table(k_max: int) -> list[LambdaMuRow]:
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    return [
        LambdaMuRow(k, period_exponent(k), lambda_of(k), _mu_row(k))
        for k in range(1, k_max + 1)
    ]


def recurrence_check(k: int, n: int) -> bool:
    """Check ``w(k, n) - w(k, n - 2**t) == lambda_of(k)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    period = 1 << period_exponent(k)
    if n - period < 2 * k + 1:
        raise ValueError(f"need n - {period} >= {2 * k + 1}, got n={n}")
    return weight_fast(k, n).weight - weight_fast(k, n - period).weight == lambda_of(k)


# Printed closed forms for k = 1..7.  Each entry is
# (denominator, constant, slope, terms) with terms (fn, m, a, b) standing for
# (a + b*sqrt 2) * fn(m*n*pi/4).
PAPER_CLOSED_FORMS: dict[int, tuple[int, int, int, tuple[tuple[str, int, int, int], ...]]] = {
    1: (4, -5, 6, (("cos", 4, 1, 0),)),
    2: (4, -13, 8, (("cos", 4, -1, 0), ("cos", 2, 2, 0))),
    3: (8, -45, 18, (("cos", 4, 3, 0), ("cos", 2, 2, 0), ("sin", 2, 6, 0))),
    4: (8, -71, 22, (
        ("cos", 4, -3, 0), ("cos", 1, 4, 2), ("sin", 2, 2, 0),
        ("cos", 2, -6, 0), ("cos", 3, 4, -2),
    )),
    5: (16, -196, 48, (
        ("cos", 1, 4, 3), ("sin", 1, 2, 3),
        ("cos", 2, -2, 0), ("sin", 2, -6, 0),
        ("cos", 3, 4, -3), ("sin", 3, -2, 3),
        ("cos", 4, 8, 0),
        ("cos", 5, 4, -3), ("sin", 5, 2, -3),
        ("cos", 6, -2, 0), ("sin", 6, 6, 0),
        ("cos", 7, 4, 3), ("sin", 7, -2, -3),
    )),
    6: (8, -128, 26, (
        ("cos", 1, 1, 1), ("sin", 1, 4, 2),
        ("cos", 2, 4, 0), ("sin", 2, -1, 0),
        ("cos", 3, 1, -1), ("sin", 3, -4, 2),
        ("cos", 4, -4, 0),
        ("cos", 5, 1, -1), ("sin", 5, 4, -2),
        ("cos", 6, 4, 0), ("sin", 6, 1, 0),
        ("cos", 7, 1, 1), ("sin", 7, -4, -2),
    )),
    7: (16, -315, 54, (
        ("cos", 1, -1, -3), ("sin", 1, 7, 6),
        ("cos", 2, 3, 0), ("sin", 2, 9, 0),
        ("cos", 3, -1, 3), ("sin", 3, -7, 6),
        ("cos", 4, 9, 0),
        ("cos", 5, -1, 3), ("sin", 5, 7, -6),
        ("cos", 6, 3, 0), ("sin", 6, -9, 0),
        ("cos", 7, -1, -3), ("sin", 7, -7, -6),
    )),
}


def closed_form_paper(k: int, n: int) -> int:
    """Evaluate the printed trigonometric formula for ``w(k, n)`` exactly."""
    if k not in PAPER_CLOSED_FORMS:
        raise ValueError(f"printed closed forms exist for k in 1..7, got k={k}")
    if n < 2 * k + 1:
        raise ValueError(f"need n >= {2 * k + 1}, got n={n}")
    denom, const, slope, terms = PAPER_CLOSED_FORMS[k]
    total = QSqrt2(const + slope * n)
    for fn, m, a, b in terms:
        trig = cos_quarter_pi(m * n) if fn == "cos" else sin_quarter_pi(m * n)
        total = total + QSqrt2(a, b) * trig
    value = total / denom
    if not value.is_integer():
        raise ClosedFormError(f"w({k},{n}) evaluated to non-integer {value}")
    return int(value.a)


def paper_amplitudes(k: int) -> tuple[Fraction, Fraction, dict[int, tuple[float, float]]]:
    """Printed coefficients in canonical form ``(A0, A1, {m: (cos, sin)})``.

    Harmonic ``m`` is the term ``cos/sin(2*pi*m*n / 2**t)`` with
    ``1 <= m <= 2**(t-1)``; the printed terms at ``m`` and ``2**t - m`` are
    folded together.
    """
    denom, const, slope, terms = PAPER_CLOSED_FORMS[k]
    period = 1 << period_exponent(k)
    amps = {m: [0.0, 0.0] for m in range(1, period // 2 + 1)}
    for fn, m8, a, b in terms:
        # m8 counts multiples of pi/4; one harmonic step is 8/period of those
        if (m8 * period) % 8:
            raise ValueError(f"term {fn}({m8}n*pi/4) is not {period}-periodic")
        m = m8 * period // 8
        sign = 1.0
        if m > period // 2:
            m = period - m
            sign = -1.0
        coef = float(QSqrt2(a, b)) / denom
        if fn == "cos":
            amps[m][0] += coef
        else:
            amps[m][1] += sign * coef
    return (
        Fraction(const, denom),
        Fraction(slope, denom),
        {m: (c, s) for m, (c, s) in amps.items()},
    )


@dataclass(frozen=True)
class ClosedFormSpec:
    """``w(k, n) = A0 + A1*n + sum_j B_j * alpha**(j*n)`` for ``n >= 2**t``.

    ``alpha = exp(2*pi*i / 2**t)``.  ``residue_table[r]`` holds the exact
    ``(slope, intercept)`` with ``w(k, n) = slope*n + intercept`` whenever
    ``n % 2**t == r``.
    """

    k: int
    period: int
    A0: Fraction
    A1: Fraction
    B: tuple[complex, ...]
    residue_table: dict[int, tuple[Fraction, Fraction]] = field(repr=False)

    def _admissible(self, n: int) -> None:
        if n < self.period or n < self.k + 1:
            raise ValueError(f"closed form for k={self.k} holds for n >= {self.period}")

    def evaluate(self, n: int) -> int:
        """Evaluate the trigonometric sum in floating point and snap to an integer."""
        self._admissible(n)
        value = complex(self.A0 + self.A1 * n)
        for j, b in enumerate(self.B, start=1):
            value += b * cmath.exp(2j * cmath.pi * ((j * n) % self.period) / self.period)
        nearest = round(value.real)
        tol = SNAP_TOLERANCE * max(1.0, abs(nearest))
        if abs(value.real - nearest) > tol or abs(value.imag) > tol:
            raise ClosedFormError(f"w({self.k},{n}) evaluated to non-integer {value}")
        return int(nearest)

    def evaluate_exact(self, n: int) -> int:
        self._admissible(n)
        slope, intercept = self.residue_table[n % self.period]
        value = slope * n + intercept
        if value.denominator != 1:
            raise ClosedFormError(f"w({self.k},{n}) evaluated to non-integer {value}")
        return int(value)

    def amplitudes(self) -> dict[int, tuple[float, float]]:
        """Real cos/sin amplitude per harmonic ``m = 1 .. period/2``."""
        half = self.period // 2
        out = {}
        for m in range(1, half + 1):
            b = self.B[m - 1]
            if m == half:
                out[m] = (b.real, 0.0)
            else:
                out[m] = (2 * b.real, -2 * b.imag)
        return out


def derive_closed_form(k: int) -> ClosedFormSpec:
    """Solve the period recurrence for ``w(k, .)`` from its lambda/mu data."""
    period = 1 << period_exponent(k)
    lam = lambda_of(k)
    slope = Fraction(lam, period)
    table = {}
    for r in range(period):
        table[r] = (slope, mu_of(k, r) - lam - slope * r)
    intercepts = [table[r][1] for r in range(period)]
    a0 = sum(intercepts, Fraction(0)) / period
    coeffs = np.fft.fft(np.array([float(c) for c in intercepts])) / period
    b = tuple(complex(c) for c in coeffs[1:])
    return ClosedFormSpec(k, period, a0, slope, b, table)
