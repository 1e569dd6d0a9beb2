from collections import Counter
from itertools import product

import pytest

from steinhaus.core import BinarySequence, triangle_weight, unit_vector
from steinhaus.extremes import (
    BudgetExceeded,
    WeightEnumerator,
    balanced_search,
    max_weight,
    max_weight_search,
    minimum_positive_weight,
    partial_distribution,
    verify_max_weight,
    weight_distribution,
    z_sequence,
)

from conftest import oracle_weight

seq = BinarySequence.from_string


def oracle_distribution(n):
    return Counter(oracle_weight(list(bits)) for bits in product((0, 1), repeat=n))


def test_z_sequences():
    assert z_sequence("z1", 8) == seq("11011011")
    assert z_sequence("z1", 6) == seq("110110")
    assert z_sequence("z3", 3) == seq("011")
    assert z_sequence(2, 5) == seq("10110")
    with pytest.raises(ValueError):
        z_sequence("z4", 3)


def test_max_weight_claim():
    assert max_weight(2).value == 2
    assert max_weight(2).generators == {seq("11"), seq("10"), seq("01")}
    assert max_weight(4).value == 7
    assert max_weight(7).value == 19
    assert max_weight(7).generators == {z_sequence("z1", 7), z_sequence("z3", 7)}


@pytest.mark.parametrize("n", range(1, 13))
def test_max_weight_search_against_oracle(n):
    weights = {bits: oracle_weight(list(bits)) for bits in product((0, 1), repeat=n)}
    top = max(weights.values())
    found = max_weight_search(n)
    assert found.value == top
    assert {str(g) for g in found.generators} == {
        "".join(map(str, b)) for b, w in weights.items() if w == top
    }


def test_max_value_matches_claim():
    for n in range(1, 19):
        assert max_weight_search(n).value == max_weight(n).value


def test_verify_max_weight():
    assert verify_max_weight(3)
    # n = 1 (mod 3): search finds z1 and z2 maximal, z3 falls one short
    for n in (7, 10):
        found = max_weight_search(n)
        assert found.generators == {z_sequence("z1", n), z_sequence("z2", n)}
        assert triangle_weight(z_sequence("z3", n)) == found.value - 1
        assert not verify_max_weight(n)
    with pytest.raises(BudgetExceeded):
        verify_max_weight(19)
    assert verify_max_weight(19, max_n=20) is False


def test_z1_weight_formula_large():
    for n in range(1, 2001, 37):
        assert triangle_weight(z_sequence("z1", n)) == max_weight(n).value


def test_balanced_examples():
    assert balanced_search(3) == seq("100")
    assert triangle_weight(seq("100")) == 3
    count = sum(1 for bits in product((0, 1), repeat=4) if oracle_weight(list(bits)) == 5)
    assert balanced_search(4, "count") == count > 0
    witnesses = balanced_search(4, "all")
    assert len(witnesses) == count and all(triangle_weight(w) == 5 for w in witnesses)
    for n in (2, 5, 6):
        with pytest.raises(ValueError):
            balanced_search(n)
    with pytest.raises(ValueError):
        balanced_search(4, "some")
    with pytest.raises(BudgetExceeded):
        balanced_search(27)


def test_balanced_exists_up_to_20():
    for n in range(3, 21):
        if n % 4 in (0, 3):
            w = balanced_search(n)
            assert w is not None and triangle_weight(w) == n * (n + 1) // 4


@pytest.mark.parametrize("n", range(1, 13))
def test_distribution_against_oracle(n):
    enum = weight_distribution(n)
    assert enum.counts == dict(oracle_distribution(n))


def test_distribution_examples():
    assert weight_distribution(1).counts == {0: 1, 1: 1}
    assert weight_distribution(2).counts == {0: 1, 2: 3}
    d3 = weight_distribution(3)
    assert d3.counts[0] == 1 and d3.total == 8 and d3.min_positive() == 3


def test_distribution_budget():
    with pytest.raises(BudgetExceeded):
        weight_distribution(25)
    with pytest.raises(BudgetExceeded):
        weight_distribution(20, budget_seconds=-1)
    with pytest.raises(ValueError):
        weight_distribution(0)


def test_range_split_merge_is_order_independent():
    n = 14
    whole = weight_distribution(n).counts
    cuts = [0, 1, 77, 4000, 9999, 1 << n]
    parts = [partial_distribution(n, a, b) for a, b in zip(cuts, cuts[1:])]
    merged = sum(reversed(parts), Counter())
    assert dict(merged) == whole
    assert weight_distribution(n, workers=4).counts == whole


def test_distribution_reversal_invariant():
    n = 11
    for value in range(0, 1 << n, 17):
        x = BinarySequence(value, n)
        assert triangle_weight(x) == triangle_weight(x.reversed())


def test_enumerator_export():
    enum = weight_distribution(2)
    assert enum.to_csv() == "weight,count\n0,1\n2,3\n"
    assert enum.to_json() == '{"0": 1, "2": 3}'
    with pytest.raises(AssertionError):
        WeightEnumerator(2, {0: 1, 1: 3}).check()


def test_minimum_positive_weight():
    m5 = minimum_positive_weight(5)
    assert m5.value == 5 and m5.verified
    assert {unit_vector(0, 5), unit_vector(4, 5)} <= m5.witnesses
    m1 = minimum_positive_weight(1)
    assert m1.witnesses == {seq("1")}
    assert len(minimum_positive_weight(2).witnesses) == 3
    big = minimum_positive_weight(100)
    assert big.value == 100 and not big.verified and len(big.witnesses) == 2
