from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brunnian.free_lie import lyndon_words_int
from brunnian.ranks import (
    binomial,
    mobius,
    rank_brunnian,
    rank_pure,
    rank_table,
    witt_inversion,
    witt_rank,
)

GOLDEN = Path(__file__).parent / "golden"


def brute_mobius(d):
    primes = []
    m, p = d, 2
    while m > 1:
        if m % p == 0:
            if m % (p * p) == 0:
                return 0
            primes.append(p)
            m //= p
        p += 1
    return (-1) ** len(primes)


def test_mobius_examples():
    assert [mobius(1), mobius(4), mobius(6)] == [1, 0, 1]
    assert all(mobius(d) == brute_mobius(d) for d in range(1, 200))
    with pytest.raises(ValueError):
        mobius(0)


def test_witt_examples():
    assert witt_rank(1, 5) == 5
    assert witt_rank(2, 2) == 1
    assert witt_rank(6, 3) == 116 == (3 ** 6 - 3 ** 3 - 3 ** 2 + 3) // 6
    assert witt_rank(4, 0) == 0


def test_witt_matches_lyndon_counts():
    for k in range(1, 5):
        words = lyndon_words_int(k, 8)
        for q in range(1, 9):
            assert witt_rank(q, k) == sum(1 for w in words if len(w) == q)


def test_rank_pure_examples():
    for n in range(1, 8):
        assert rank_pure(1, n) == n * (n - 1) // 2
    assert rank_pure(2, 3) == 1
    assert rank_pure(3, 3) == 2
    assert rank_pure(5, 1) == 0


def test_rank_brunnian_examples():
    assert rank_brunnian(1, 3) == 0
    assert rank_brunnian(2, 3) == 1
    assert rank_brunnian(5, 3) == 6
    assert rank_brunnian(6, 3) == witt_rank(6, 2) == 9


def test_brunnian_vanishes_below_n_minus_one():
    for n in range(3, 7):
        for q in range(1, 11):
            if q < n - 1:
                assert rank_brunnian(q, n) == 0
            assert rank_brunnian(q, n) >= 0


def test_convolution_identity():
    for n in range(1, 7):
        for q in range(1, 11):
            assert rank_pure(q, n) == sum(binomial(n, k) * rank_brunnian(q, n - k) for k in range(n))


@given(st.integers(0, 30), st.integers(0, 30))
def test_binomial_pascal(n, k):
    from math import comb
    assert binomial(n, k) == (comb(n, k) if k <= n else 0)


def test_witt_inversion_examples():
    assert witt_inversion({1: 2}, 6) == {q: witt_rank(q, 2) for q in range(1, 7)}
    assert witt_inversion({2: 1}, 6) == {1: 0, 2: 1, 3: 0, 4: 0, 5: 0, 6: 0}
    g = {2: 1, 3: 2, 4: 3, 5: 4, 6: 5}
    assert witt_inversion(g, 6) == {1: 0, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9}


def test_witt_inversion_rejects_negative_counts():
    with pytest.raises(ValueError):
        witt_inversion({1: -1}, 3)
    with pytest.raises(ValueError):
        witt_inversion({0: 1}, 3)


def weighted_lyndon_counts(g, deg_max):
    """Lyndon words over letters of prescribed weights, counted by total weight."""
    weights = [d for d, c in sorted(g.items()) for _ in range(c)]
    counts = {N: 0 for N in range(1, deg_max + 1)}
    if not weights:
        return counts
    for w in lyndon_words_int(len(weights), deg_max):
        total = sum(weights[i] for i in w)
        if total <= deg_max:
            counts[total] += 1
    return counts


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(1, 4), st.integers(0, 2), max_size=3))
def test_witt_inversion_matches_weighted_lyndon_oracle(g):
    assert witt_inversion(g, 6) == weighted_lyndon_counts(g, 6)


def test_witt_inversion_reproduces_witt():
    for k in range(0, 5):
        inv = witt_inversion({1: k} if k else {}, 8)
        assert inv == {q: witt_rank(q, k) for q in range(1, 9)}


def test_rank_table_examples():
    t2 = rank_table(2, 4)
    assert t2.brunnian_ranks == {1: 1, 2: 0, 3: 0, 4: 0}
    t3 = rank_table(3, 6)
    assert t3.brunnian_ranks == {1: 0, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9}
    t4 = rank_table(4, 4)
    assert t4.brunnian_ranks == {1: 0, 2: 0, 3: 2, 4: 9}
    with pytest.raises(ValueError):
        rank_table(1, 3)


def test_rank_table_formats():
    t = rank_table(3, 6)
    assert t.to_csv() == (GOLDEN / "rank_n3_q6.csv").read_bytes().decode("utf-8")
    assert '"brunnian": 9' in t.to_json()
    latex = t.to_latex()
    assert latex.startswith(r"\begin{tabular}") and r"6 & 9 & 9 \\" in latex
    assert t.to_text().splitlines()[2].split() == ["2", "1", "1"]
