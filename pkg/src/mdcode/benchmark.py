"""Throughput measurement for the D2 decoders."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from .bitstream import pack_bits
from .fastdecode import DecoderState, build_table, decode_bits_fast, decode_bytes_fast
from .multidelim import CodeSpec, encode_stream


@dataclass(frozen=True)
class StreamConfig:
    n_bytes: int = 100 * 10**6
    block_values: int = 200_000
    max_bits: int = 24  # values are drawn with a uniform bit length in 1..max_bits
    seed: int = 2024


@dataclass(frozen=True)
class Timing:
    name: str
    seconds: float
    n_bytes: int
    n_values: int

    @property
    def mb_per_s(self) -> float:
        return self.n_bytes / self.seconds / 1e6


def make_stream(cfg: StreamConfig = StreamConfig()) -> tuple[np.ndarray, int]:
    """A D2 byte stream of ``cfg.n_bytes`` made by tiling one random block.

    The block is padded with ``110`` codewords up to a byte boundary so tiles
    join without splitting codewords. Returns the bytes and the number of
    values in one block.
    """
    rng = random.Random(cfg.seed)
    xs = [rng.getrandbits(rng.randint(1, cfg.max_bits)) | 1 for _ in range(cfg.block_values)]
    bits = encode_stream(CodeSpec((2,)), xs)
    pad = 0
    while (len(bits) + 3 * pad) % 8:
        pad += 1
    block = np.frombuffer(pack_bits(bits + "110" * pad), dtype=np.uint8)
    reps = -(-cfg.n_bytes // block.size)
    return np.tile(block, reps)[: cfg.n_bytes], len(xs) + pad


def time_decoder(name: str, decode, data: np.ndarray, chunk: int = 1 << 22) -> Timing:
    """Decode ``data`` in chunks, threading the decoder state through."""
    decode(data[:chunk])  # compile and warm caches
    state = DecoderState()
    count = 0
    start = time.perf_counter()
    for i in range(0, data.size, chunk):
        out, state = decode(data[i : i + chunk], state)
        count += out.size
    return Timing(name, time.perf_counter() - start, int(data.size), count)


def compare(cfg: StreamConfig = StreamConfig()) -> tuple[Timing, Timing]:
    data, _ = make_stream(cfg)
    table = build_table()
    by_byte = time_decoder("byte table", lambda d, s=None: decode_bytes_fast(table, d, s), data)
    by_bit = time_decoder("bit serial", decode_bits_fast, data)
    if by_byte.n_values != by_bit.n_values:
        raise AssertionError("decoders disagree on the value count")
    return by_byte, by_bit
