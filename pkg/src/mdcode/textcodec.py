"""Word-based lossless text compression with rank-ordered codewords.

Text is cut into alternating runs of word bytes and separator bytes. Tokens
are ranked by frequency and the ``i``-th most frequent token is written as
the ``i``-th codeword of the chosen code.

Container layout (integers little-endian)::

    b"MDC1"
    u16 name length, code name in ASCII (e.g. "D2,3,5", "Fib3")
    u32 vocabulary size, then per token in rank order: u32 length, bytes
    u64 token count
    u64 payload bit length
    payload, MSB-first, zero-padded to whole bytes
"""

from __future__ import annotations

import math
import re
import struct
from collections import Counter
from dataclasses import dataclass

from .analysis import length_histogram
from .bitstream import pack_bits, unpack_bits
from .codes import parse_code, split_codewords
from .fibonacci import FibSpec
from .multidelim import CodeSpec, TruncatedStreamError

__all__ = [
    "MAGIC",
    "ContainerError",
    "Vocabulary",
    "Container",
    "CodeStats",
    "tokenize",
    "compress",
    "decompress",
    "stats",
]

MAGIC = b"MDC1"
_TOKEN_RE = re.compile(rb"[A-Za-z0-9\x80-\xff]+|[^A-Za-z0-9\x80-\xff]+")


class ContainerError(ValueError):
    """Malformed or truncated compressed container."""


def tokenize(text: bytes) -> list[bytes]:
    """Maximal runs of word bytes and of separator bytes.

    Word bytes are ASCII letters and digits plus every byte >= 0x80, so
    multi-byte UTF-8 letters stay inside words.
    """
    return _TOKEN_RE.findall(bytes(text))


@dataclass(frozen=True)
class Vocabulary:
    tokens: tuple[bytes, ...]  # rank order, rank = index + 1
    counts: tuple[int, ...]

    @classmethod
    def from_tokens(cls, tokens) -> "Vocabulary":
        freq = Counter(tokens)
        ordered = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))
        return cls(tuple(t for t, _ in ordered), tuple(c for _, c in ordered))

    def __len__(self):
        return len(self.tokens)

    def rank_map(self) -> dict[bytes, int]:
        return {t: i + 1 for i, t in enumerate(self.tokens)}


@dataclass(frozen=True)
class Container:
    code: CodeSpec | FibSpec
    vocabulary: tuple[bytes, ...]
    n_tokens: int
    payload_bits: int
    payload: bytes

    @property
    def avg_codeword_length(self) -> float:
        return self.payload_bits / self.n_tokens if self.n_tokens else 0.0

    def to_bytes(self) -> bytes:
        name = str(self.code).encode("ascii")
        parts = [MAGIC, struct.pack("<H", len(name)), name, struct.pack("<I", len(self.vocabulary))]
        for tok in self.vocabulary:
            parts.append(struct.pack("<I", len(tok)))
            parts.append(tok)
        parts.append(struct.pack("<QQ", self.n_tokens, self.payload_bits))
        parts.append(self.payload)
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Container":
        view = memoryview(bytes(data))
        pos = 0

        def take(n: int) -> bytes:
            nonlocal pos
            if pos + n > len(view):
                raise ContainerError(f"truncated container: need {n} bytes at offset {pos}")
            chunk = bytes(view[pos : pos + n])
            pos += n
            return chunk

        if take(4) != MAGIC:
            raise ContainerError("bad magic")
        (name_len,) = struct.unpack("<H", take(2))
        try:
            code = parse_code(take(name_len).decode("ascii"))
        except (UnicodeDecodeError, ValueError) as exc:
            raise ContainerError(f"bad code name: {exc}") from None
        (vocab_size,) = struct.unpack("<I", take(4))
        vocab = []
        for _ in range(vocab_size):
            (n,) = struct.unpack("<I", take(4))
            vocab.append(take(n))
        n_tokens, nbits = struct.unpack("<QQ", take(16))
        payload = bytes(view[pos:])
        if len(payload) != (nbits + 7) // 8:
            raise ContainerError(f"payload has {len(payload)} bytes, {nbits} bits declared")
        return cls(code, tuple(vocab), n_tokens, nbits, payload)


def compress(text: bytes, code: CodeSpec | FibSpec | str) -> Container:
    if isinstance(code, str):
        code = parse_code(code)
    tokens = tokenize(text)
    vocab = Vocabulary.from_tokens(tokens)
    words = code.automaton.first(len(vocab))
    by_token = dict(zip(vocab.tokens, words))
    bits = "".join(by_token[t] for t in tokens)
    return Container(code, vocab.tokens, len(tokens), len(bits), pack_bits(bits))


def decompress(container: Container | bytes) -> bytes:
    if not isinstance(container, Container):
        container = Container.from_bytes(container)
    code = container.code
    bits = unpack_bits(container.payload, container.payload_bits)
    try:
        words = split_codewords(code, bits)
    except TruncatedStreamError as exc:
        raise ContainerError(f"payload ends inside a codeword ({exc.remaining_bits} bits)") from None
    if len(words) != container.n_tokens:
        raise ContainerError(f"payload holds {len(words)} tokens, header says {container.n_tokens}")
    vocab = container.vocabulary
    lookup = dict(zip(code.automaton.first(len(vocab)), vocab))
    try:
        return b"".join(lookup[w] for w in words)
    except KeyError as exc:
        raise ContainerError(f"codeword {exc.args[0]} is outside the vocabulary") from None


@dataclass(frozen=True)
class CodeStats:
    code: CodeSpec | FibSpec
    vocab_size: int
    n_tokens: int
    avg_length: float
    delta_pct: float  # relative to the first code in the report
    entropy: float  # zero-order, bits per token


def _total_bits(code, counts) -> int:
    total, start = 0, 0
    for length, how_many in length_histogram(code, len(counts)):
        total += length * sum(counts[start : start + how_many])
        start += how_many
    return total


def stats(text: bytes, codes) -> list[CodeStats]:
    """Average codeword length per code for one text, plus word entropy."""
    codes = [parse_code(c) if isinstance(c, str) else c for c in codes]
    vocab = Vocabulary.from_tokens(tokenize(text))
    n = sum(vocab.counts)
    entropy = -sum(c / n * math.log2(c / n) for c in vocab.counts) if n else 0.0
    report, base = [], None
    for code in codes:
        avg = _total_bits(code, vocab.counts) / n if n else 0.0
        if base is None:
            base = avg
        delta = 100.0 * (avg - base) / base if base else 0.0
        report.append(CodeStats(code, len(vocab), n, avg, delta, entropy))
    return report
