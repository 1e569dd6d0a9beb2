"""Independent oracles shared by the test modules.

These work on plain Python lists and never touch the packed-integer kernels
they check.
"""
from __future__ import annotations

import pytest


def oracle_rows(bits: list[int]) -> list[list[int]]:
    rows = [list(bits)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([(prev[i] + prev[i + 1]) % 2 for i in range(len(prev) - 1)])
    return rows


def oracle_weight(bits: list[int], m: int | None = None) -> int:
    rows = oracle_rows(bits)
    return sum(sum(r) for r in rows[: len(rows) if m is None else m])


def oracle_unit(k: int, n: int) -> list[int]:
    return [int(i == k) for i in range(n)]


def pascal_mod(limit: int, p: int) -> list[list[int]]:
    """``table[r][s] = C(r, s) mod p`` for ``0 <= s <= r <= limit`` via Pascal's rule."""
    table = [[1]]
    for r in range(1, limit + 1):
        prev = table[-1]
        row = [1] + [(prev[s - 1] + prev[s]) % p for s in range(1, r)] + [1]
        table.append(row)
    return table


@pytest.fixture(scope="session")
def pascal():
    cache = {}

    def get(p: int, limit: int = 2000):
        if (p, limit) not in cache:
            cache[p, limit] = pascal_mod(limit, p)
        return cache[p, limit]

    return get


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report().splitlines():
        terminalreporter.write_line(line)
