import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from steinhaus.canonical import (
    ClosedFormError,
    closed_form_paper,
    derive_closed_form,
    lambda_mu_table,
    lambda_of,
    mu_of,
    paper_amplitudes,
    recurrence_check,
    weight_bruteforce,
    weight_fast,
)
from steinhaus.core import BinarySequence, derivative, unit_vector

from conftest import oracle_unit, oracle_weight

# lambda/mu tables printed for k = 1..7
PAPER_TABLE = {
    1: (1, 3, (2, 3)),
    2: (2, 8, (5, 7, 8, 11)),
    3: (2, 9, (4, 6, 8, 9)),
    4: (3, 22, (13, 17, 19, 21, 22, 27, 30, 33)),
    5: (3, 24, (13, 15, 19, 21, 23, 24, 30, 33)),
    6: (3, 26, (11, 15, 17, 21, 23, 25, 26, 33)),
    7: (3, 27, (8, 12, 16, 18, 22, 24, 26, 27)),
}


def oracle_w(k, n):
    return oracle_weight(oracle_unit(k, n))


def test_bruteforce_examples():
    assert all(weight_bruteforce(0, n) == n for n in range(1, 40))
    assert weight_bruteforce(6, 11) == 21
    assert weight_bruteforce(1, 3) == 3
    with pytest.raises(ValueError):
        weight_bruteforce(5, 5)


def test_worked_example():
    bd = weight_fast(6, 203)
    assert (bd.t, bd.period, bd.q, bd.r, bd.lambda_, bd.mu, bd.weight) == (3, 8, 25, 3, 26, 21, 645)
    assert bd.applicable and bd.k_effective == 6


def test_symmetric_and_degenerate():
    assert weight_fast(196, 203).weight == 645
    assert weight_fast(196, 203).k_effective == 6
    for k, n in [(0, 17), (16, 17), (0, 1)]:
        bd = weight_fast(k, n)
        assert bd.weight == n and not bd.applicable
        assert bd.t is None and bd.lambda_ is None and bd.mu is None
    with pytest.raises(ValueError):
        weight_fast(3, 3)
    with pytest.raises(ValueError):
        weight_fast(-1, 3)


def test_lambda_mu_values():
    for k, (t, lam, mus) in PAPER_TABLE.items():
        assert lambda_of(k) == lam
        assert tuple(mu_of(k, r) for r in range(len(mus))) == mus
    # beyond the printed tables: lambda_of(8) by the list oracle with 16 rows
    assert lambda_of(8) == oracle_weight(oracle_unit(8, 8 + 1 + 16), 16) == 62
    assert mu_of(2, 3) == 11 and mu_of(6, 3) == 21 and mu_of(7, 0) == 8
    with pytest.raises(ValueError):
        mu_of(2, 4)


def test_lambda_mu_table():
    rows = lambda_mu_table(9)
    assert [(r.k, r.t, r.lambda_, r.mu) for r in rows[:7]] == [(k, *v) for k, v in PAPER_TABLE.items()]
    assert rows[8].t == 4 and len(rows[8].mu) == 16
    with pytest.raises(ValueError):
        lambda_mu_table(0)


def test_recurrence_examples():
    assert recurrence_check(6, 203)
    assert recurrence_check(1, 5) and oracle_w(1, 5) - oracle_w(1, 3) == 3
    assert recurrence_check(2, 11) and oracle_w(2, 11) - oracle_w(2, 7) == 8
    with pytest.raises(ValueError):
        recurrence_check(2, 8)


def test_fast_matches_oracle_small():
    for n in range(1, 41):
        for k in range(n):
            assert weight_fast(k, n).weight == oracle_w(k, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4096).flatmap(lambda n: st.tuples(st.integers(0, n - 1), st.just(n))))
def test_fast_matches_bruteforce_random(kn):
    k, n = kn
    assert weight_fast(k, n).weight == weight_bruteforce(k, n)


def test_symmetry():
    for n in range(1, 257, 5):
        for k in range(n):
            assert weight_fast(k, n).weight == weight_fast(n - 1 - k, n).weight


def test_row_collapse():
    for k in range(1, 40):
        period = 1 << k.bit_length()
        for n in range(period + k + 1, period + k + 12):
            row = unit_vector(k, n)
            for _ in range(period):
                row = derivative(row)
            assert row == unit_vector(k, n - period)


def test_arithmetic_progression():
    for k in range(1, 12):
        period = 1 << k.bit_length()
        for r in range(period):
            seq = [weight_bruteforce(k, q * period + r) for q in range(1, 8)]
            assert all(b - a == lambda_of(k) for a, b in zip(seq, seq[1:]))


@pytest.mark.parametrize("k, n, expected", [(1, 3, 3), (6, 203, 645), (2, 9, 15), (1, 10, 14)])
def test_closed_form_examples(k, n, expected):
    assert closed_form_paper(k, n) == expected == weight_bruteforce(k, n)


def test_closed_form_domain():
    with pytest.raises(ValueError):
        closed_form_paper(8, 40)
    with pytest.raises(ValueError):
        closed_form_paper(3, 6)


def test_closed_form_rejects_corrupted_table(monkeypatch):
    from steinhaus import canonical

    bad = dict(canonical.PAPER_CLOSED_FORMS)
    denom, const, slope, terms = bad[1]
    bad[1] = (denom, const + 1, slope, terms)
    monkeypatch.setattr(canonical, "PAPER_CLOSED_FORMS", bad)
    with pytest.raises(ClosedFormError):
        closed_form_paper(1, 3)


def test_closed_form_all_small():
    for k in range(1, 8):
        for n in range(2 * k + 1, 130):
            assert closed_form_paper(k, n) == oracle_w(k, n)


def test_derive_k1():
    spec = derive_closed_form(1)
    assert spec.A0 == Fraction(-5, 4) and spec.A1 == Fraction(3, 2)
    assert spec.B[0] == pytest.approx(0.25, abs=1e-12)
    assert spec.residue_table == {0: (Fraction(3, 2), Fraction(-1)), 1: (Fraction(3, 2), Fraction(-3, 2))}


def test_derive_k2():
    spec = derive_closed_form(2)
    assert spec.A1 == 2 and spec.A0 == Fraction(-13, 4)
    assert spec.B[1] == pytest.approx(-0.25, abs=1e-12)
    # B1 alpha^n + B3 alpha^{3n} = (2/4) cos(n pi/2)
    amps = spec.amplitudes()
    assert amps[1] == pytest.approx((0.5, 0.0), abs=1e-12)


def test_derive_matches_printed_coefficients():
    for k in range(1, 8):
        spec = derive_closed_form(k)
        a0, a1, printed = paper_amplitudes(k)
        assert (spec.A0, spec.A1) == (a0, a1)
        derived = spec.amplitudes()
        assert derived.keys() == printed.keys()
        for m in derived:
            assert derived[m] == pytest.approx(printed[m], abs=1e-9)


def test_derive_invariants():
    for k in range(1, 17):
        spec = derive_closed_form(k)
        assert spec.A1 == Fraction(lambda_of(k), spec.period)
        assert spec.A0 == sum(c for _, c in spec.residue_table.values()) / spec.period
        assert len(spec.B) == spec.period - 1


def test_derive_k8_against_bruteforce():
    spec = derive_closed_form(8)
    assert spec.period == 16
    for n in range(17, 201):
        assert spec.evaluate(n) == spec.evaluate_exact(n) == weight_bruteforce(8, n)
    with pytest.raises(ValueError):
        spec.evaluate(15)


def test_derive_agrees_with_fast():
    for k in range(1, 17):
        spec = derive_closed_form(k)
        for n in range(2 * k + 1, 513, 7):
            assert spec.evaluate(n) == weight_fast(k, n).weight


def test_concurrent_calls_match_sequential():
    pairs = [(k, n) for n in range(60, 400, 13) for k in range(0, n, 11)]
    expected = [weight_fast(k, n).weight for k, n in pairs]
    lambda_of.cache_clear()
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(lambda kn: weight_fast(*kn).weight, pairs))
    assert got == expected
