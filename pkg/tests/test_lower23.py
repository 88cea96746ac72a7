import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdcode.lower23 import (
    Lower23Factorization,
    coprime_to_nat,
    is_lower23_codeword,
    lower23_decode,
    lower23_encode,
    lower23_factorize,
    lower23_refold,
    nat_to_coprime,
)
from mdcode.multidelim import CodeSpec, is_codeword

import oracles

# n, x, pairs in extraction order, terminal, codeword
TABLE = [
    (1, 1, [], 1, "110"),
    (2, 5, [(0, 1)], 1, "100110"),
    (3, 7, [(2, 1)], 2, "00110"),
    (4, 11, [(2, 2)], 1, "010110"),
    (5, 13, [(1, 2)], 1, "1110110"),
    (6, 17, [(0, 2)], 1, "1010110"),
    (7, 19, [(1, 1), (0, 1)], 1, "1001110110"),
    (8, 23, [(0, 1), (0, 1)], 1, "100100110"),
    (9, 25, [(2, 1), (2, 1)], 2, "0000110"),
    (10, 29, [(1, 1), (2, 1)], 2, "001110110"),
    (11, 31, [(2, 3)], 1, "0110"),
    (12, 35, [(1, 3)], 1, "11110110"),
    (13, 37, [(0, 1), (2, 1)], 2, "00100110"),
    (14, 41, [(2, 1), (2, 2)], 1, "01000110"),
    (15, 43, [(0, 3)], 1, "10110"),
]


@pytest.mark.parametrize("n, x, pairs, terminal, code", TABLE)
def test_table_rows(n, x, pairs, terminal, code):
    assert nat_to_coprime(n) == x and coprime_to_nat(x) == n
    fact = lower23_factorize(x)
    assert fact == Lower23Factorization(tuple(pairs), terminal)
    assert lower23_encode(n) == code
    assert lower23_decode(code) == n


def test_coprime_enumeration():
    coprimes = [x for x in range(1, 3000) if x % 2 and x % 3]
    assert [nat_to_coprime(n) for n in range(1, len(coprimes) + 1)] == coprimes
    with pytest.raises(ValueError):
        nat_to_coprime(0)
    with pytest.raises(ValueError):
        coprime_to_nat(9)


@pytest.mark.parametrize("x", [0, 2, 3, 6, 9, -5])
def test_factorize_rejects(x):
    with pytest.raises(ValueError):
        lower23_factorize(x)


def test_factorization_matches_two_way_search(frozen):
    for x, (pairs, terminal) in frozen["lower23_pairs"].items():
        fact = lower23_factorize(int(x))
        assert [list(p) for p in fact.pairs] == pairs and fact.terminal == terminal


@given(st.integers(1, 10**12))
def test_factorize_refold(n):
    x = nat_to_coprime(n)
    fact = lower23_factorize(x)
    assert lower23_refold(fact) == x
    assert all(d in (0, 1, 2) and k >= 1 for d, k in fact.pairs)
    assert (fact.terminal == 2) == (bool(fact.pairs) and fact.pairs[-1] == (2, 1))
    assert (list(fact.pairs), fact.terminal) == oracles.lower23_pairs(x)


def test_deltas_stay_small_up_to_a_million():
    for n in range(1, 10**6 // 3):
        for d, _ in lower23_factorize(nat_to_coprime(n)).pairs:
            assert 0 <= d <= 2


D2 = CodeSpec((2,))


@given(st.integers(1, 10**15))
def test_roundtrip_and_subset_of_d2(n):
    w = lower23_encode(n)
    assert lower23_decode(w) == n
    assert is_codeword(D2, w)


def test_incompleteness_witness():
    w = "10000110"
    assert is_codeword(D2, w)
    assert not is_lower23_codeword(w)
    with pytest.raises(ValueError):
        lower23_decode(w)


@pytest.mark.parametrize("w", ["", "1", "111", "1100", "0111"])
def test_decode_rejects_malformed(w):
    assert not is_lower23_codeword(w)


def test_decodable_words_are_exactly_the_image():
    accepted = 0
    for n in range(13):
        for w in oracles.all_strings(n):
            try:
                idx = lower23_decode(w)
            except ValueError:
                continue
            accepted += 1
            assert lower23_encode(idx) == w
    assert accepted > 0
    for n in range(1, 3000):
        assert is_lower23_codeword(lower23_encode(n))
