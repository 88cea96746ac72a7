import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mdcode.analysis import avg_codeword_length
from mdcode.codes import parse_code
from mdcode.textcodec import (
    MAGIC,
    Container,
    ContainerError,
    Vocabulary,
    compress,
    decompress,
    stats,
    tokenize,
)

CODES = ["Fib3", "D2", "D2,3", "D2,3,5", "D2,4,5"]

texts = st.binary(max_size=300) | st.lists(
    st.sampled_from([b"the", b"a", b" ", b", ", b"cat", b"\n", b"\xc3\xa9t\xc3\xa9", b"42"]), max_size=80
).map(b"".join)


def test_tokenize_examples():
    assert tokenize(b"to be") == [b"to", b" ", b"be"]
    assert tokenize(b"") == []
    assert tokenize(b"a,a") == [b"a", b",", b"a"]
    assert tokenize("été ok".encode()) == ["été".encode(), b" ", b"ok"]


@given(st.binary(max_size=500))
def test_tokens_alternate_and_concatenate(data):
    tokens = tokenize(data)
    assert b"".join(tokens) == data
    kinds = [t[:1].isalnum() or t[0] >= 0x80 for t in tokens]
    assert all(a != b for a, b in zip(kinds, kinds[1:]))


def test_vocabulary_order():
    v = Vocabulary.from_tokens([b"b", b"a", b"c", b"a", b"b", b"d"])
    assert v.tokens == (b"a", b"b", b"c", b"d")
    assert v.counts == (2, 2, 1, 1)
    assert v.rank_map() == {b"a": 1, b"b": 2, b"c": 3, b"d": 4}


def test_single_token_d2():
    c = compress(b"hello", "D2")
    assert c.payload_bits == 3 and c.avg_codeword_length == 3.0
    assert c.payload == bytes([0b11000000])


def test_two_equal_tokens_d2():
    c = compress(b"x-x-", "D2")  # x and "-" twice each: ranks 1 and 2
    assert c.payload_bits == 2 * 3 + 2 * 4
    assert c.avg_codeword_length == 3.5
    assert compress(b"ab", "D2").n_tokens == 1


@pytest.mark.parametrize("code", CODES)
def test_roundtrip_through_bytes(code):
    text = b"It was the best of times, it was the worst of times.\n" * 3
    blob = compress(text, code).to_bytes()
    assert blob[:4] == MAGIC
    assert decompress(blob) == text
    assert Container.from_bytes(blob).code == parse_code(code)


@given(texts, st.sampled_from(CODES))
def test_fuzz_roundtrip(data, code):
    c = compress(data, code)
    assert c.payload_bits <= 8 * len(c.payload) < c.payload_bits + 8 or c.payload_bits == len(c.payload) == 0
    assert decompress(c.to_bytes()) == data


@given(texts, st.sampled_from(CODES))
def test_avg_length_matches_analysis(data, code):
    c = compress(data, code)
    v = Vocabulary.from_tokens(tokenize(data))
    if not v.counts:
        return
    p = np.array(v.counts, dtype=float) / sum(v.counts)
    assert c.avg_codeword_length == pytest.approx(avg_codeword_length(parse_code(code), p), abs=1e-9)
    [row] = stats(data, [code])
    assert row.avg_length == pytest.approx(c.avg_codeword_length, abs=1e-12)


@given(texts, st.sampled_from(CODES))
def test_more_frequent_tokens_get_no_longer_codewords(data, code):
    v = Vocabulary.from_tokens(tokenize(data))
    words = parse_code(code).automaton.first(len(v))
    for i in range(len(v) - 1):
        assert v.counts[i] >= v.counts[i + 1]
        assert len(words[i]) <= len(words[i + 1])


def test_stats_report():
    text = b"to be or not to be that is the question " * 5
    rows = stats(text, CODES)
    assert rows[0].delta_pct == 0.0
    assert len({r.vocab_size for r in rows}) == 1
    assert all(r.entropy <= r.avg_length for r in rows)
    assert stats(b"", ["D2"])[0].avg_length == 0.0


def _zipf_corpus(n_types):
    # counts proportional to 1/i, so the empirical distribution is Zipf(1)
    top = 10 * n_types
    return Vocabulary(tuple(f"w{i}".encode() for i in range(n_types)), tuple(max(1, top // i) for i in range(1, n_types + 1)))


def test_synthetic_zipf_signs():
    v = _zipf_corpus(10**4)
    text = b" ".join(t for t, c in zip(v.tokens, v.counts) for _ in range(c))
    rows = {str(r.code): r.avg_length for r in stats(text, CODES)}
    assert rows["D2,3,5"] < rows["Fib3"] < rows["D2"]


@pytest.mark.parametrize(
    "mutate",
    [
        lambda b: b"XXXX" + b[4:],
        lambda b: b[:-1],
        lambda b: b[:10],
        lambda b: b + b"\x00",
        lambda b: b[:4] + b"\x03\x00" + b"Dxx" + b[9:],
    ],
)
def test_corrupt_containers_raise(mutate):
    blob = compress(b"a b a c a b", "D2,3").to_bytes()
    with pytest.raises(ContainerError):
        decompress(mutate(blob))


def test_payload_inconsistencies_raise():
    good = compress(b"a b a c", "D2")
    # declare one token too many
    bad = Container(good.code, good.vocabulary, good.n_tokens + 1, good.payload_bits, good.payload)
    with pytest.raises(ContainerError):
        decompress(bad)
    # cut the last codeword
    bad = Container(good.code, good.vocabulary, good.n_tokens, good.payload_bits - 1, good.payload)
    with pytest.raises(ContainerError):
        decompress(bad)
    # codeword beyond the vocabulary
    bad = Container(good.code, good.vocabulary[:1], good.n_tokens, good.payload_bits, good.payload)
    with pytest.raises(ContainerError):
        decompress(bad)
