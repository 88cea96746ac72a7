"""Byte-at-a-time table decoder for D2.

Each input byte ``u`` and the undecoded remainder ``r`` of the previous
bytes select one 32-bit table row. The row holds up to three decoded value
fragments ``w1..w3`` (bits after the implicit leading 1), their lengths, one
flag per fragment telling whether it finishes a codeword, and the next
remainder. Rows are generated by running a bit-serial decoder over ``r + u``.

Remainder states. The bit text alone is ambiguous: a lone ``1`` can be the
first bit of a codeword or the tail of a long interior run whose other ones
were already emitted, and a lone ``0`` can be an interior zero (which may
open the delimiter ``0110``) or a deferred first bit of a codeword. Keeping
those apart takes eight states, so the table is ``8 x 256`` rows.

Row layouts, selected by the flags ``f1 f2 f3`` in bits 31, 30, 29
(0-indexed)::

    000: w1[0:10]  |w1|[10:14] r[14:17]
    100: w1[0:6]   |w1|[6:9]   w2[9:16]  |w2|[16:19] r[19:22]
    11x: w1[0:6]   |w1|[6:9]   w2[9:13]  |w2|[13:16] w3[16:20] |w3|[20:23] r[23:26]

Fields a layout does not use are zero.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

__all__ = [
    "RemainderState",
    "OracleRow",
    "DecodeTable",
    "DecoderState",
    "StreamCorruptionError",
    "TableConstructionError",
    "streaming_oracle",
    "build_table",
    "pack_row",
    "unpack_row",
    "decode_bytes",
    "decode_bytes_fast",
    "decode_bits_fast",
]

F1, F2, F3 = 1 << 31, 1 << 30, 1 << 29
ACCUMULATOR_BITS = 64


class RemainderState(IntEnum):
    EMPTY = 0  # at a codeword start, nothing pending
    ZERO = 1  # interior 0, may open a delimiter
    ONE = 2  # codeword starts with 1
    ZERO_ONE = 3
    ONE_ONE = 4  # codeword starts with 11
    ZERO_ONE_ONE = 5
    RUN = 6  # last 1 of a run of >= 3 ones, the others already emitted
    LEAD_ZERO = 7  # first bit of a codeword, deferred, is 0

    @property
    def bits(self) -> str:
        return _STATE_BITS[self]


_STATE_BITS = ("", "0", "1", "01", "11", "011", "1", "0")

S = RemainderState
# (state, bit) -> (emitted bits, completes a codeword, next state)
_STEP = {
    (S.EMPTY, 0): ("0", False, S.EMPTY),
    (S.EMPTY, 1): ("", False, S.ONE),
    (S.ZERO, 0): ("0", False, S.ZERO),
    (S.ZERO, 1): ("", False, S.ZERO_ONE),
    (S.ONE, 0): ("1", False, S.ZERO),
    (S.ONE, 1): ("", False, S.ONE_ONE),
    (S.ZERO_ONE, 0): ("01", False, S.ZERO),
    (S.ZERO_ONE, 1): ("", False, S.ZERO_ONE_ONE),
    (S.ONE_ONE, 0): ("", True, S.EMPTY),
    (S.ONE_ONE, 1): ("11", False, S.RUN),
    (S.ZERO_ONE_ONE, 0): ("", True, S.EMPTY),
    (S.ZERO_ONE_ONE, 1): ("011", False, S.RUN),
    (S.RUN, 0): ("", False, S.ZERO),
    (S.RUN, 1): ("1", False, S.RUN),
    (S.LEAD_ZERO, 0): ("00", False, S.EMPTY),
    (S.LEAD_ZERO, 1): ("0", False, S.ONE),
}
del S


class StreamCorruptionError(ValueError):
    """The stream cannot be decoded within the accumulator width."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


class TableConstructionError(AssertionError):
    pass


class OracleRow(NamedTuple):
    fragments: tuple[str, ...]
    flags: tuple[bool, ...]
    next_state: RemainderState


def streaming_oracle(r: RemainderState | int, bits: str, max_complete: int | None = None) -> OracleRow:
    """Decode ``bits`` one at a time starting from remainder ``r``.

    Every completed codeword closes a fragment with flag ``True``; the bits
    decoded so far for the unfinished codeword form a last fragment with flag
    ``False``. With ``max_complete`` set, bits left after that many
    completions are folded into the next remainder instead of emitted.
    """
    state = RemainderState(r)
    fragments, flags = [], []
    current = []
    for pos, ch in enumerate(bits):
        if max_complete is not None and len(fragments) == max_complete:
            return _defer(fragments, flags, bits[pos:])
        out, done, state = _STEP[state, int(ch)]
        current.append(out)
        if done:
            fragments.append("".join(current))
            flags.append(True)
            current = []
    if not (max_complete is not None and len(fragments) == max_complete):
        fragments.append("".join(current))
        flags.append(False)
    return OracleRow(tuple(fragments), tuple(flags), state)


def _defer(fragments, flags, rest: str) -> OracleRow:
    if len(rest) > 1:
        raise TableConstructionError(f"{len(rest)} bits left after the last fragment slot")
    state = RemainderState.LEAD_ZERO if rest == "0" else RemainderState.ONE
    return OracleRow(tuple(fragments), tuple(flags), state)


# -- packing --------------------------------------------------------------

def _field(frag: str, width: int, what: str) -> int:
    if len(frag) > width:
        raise TableConstructionError(f"{what} has {len(frag)} bits, layout allows {width}")
    return int(frag, 2) if frag else 0


def pack_row(row: OracleRow) -> int:
    frags, flags, r = row.fragments, row.flags, int(row.next_state)
    if not flags[0]:
        w1 = _field(frags[0], 10, "w1")
        return w1 | len(frags[0]) << 10 | r << 14
    w1 = _field(frags[0], 6, "w1")
    word = F1 | w1 | len(frags[0]) << 6
    if not flags[1]:
        w2 = _field(frags[1], 7, "w2")
        return word | w2 << 9 | len(frags[1]) << 16 | r << 19
    w2 = _field(frags[1], 4, "w2")
    w3 = _field(frags[2], 4, "w3") if len(frags) > 2 else 0
    n3 = len(frags[2]) if len(frags) > 2 else 0
    word |= F2 | w2 << 9 | len(frags[1]) << 13 | w3 << 16 | n3 << 20 | r << 23
    if len(flags) > 2 and flags[2]:
        word |= F3
    return word


def _frag(value: int, length: int) -> str:
    return format(value, f"0{length}b") if length else ""


def unpack_row(word: int) -> OracleRow:
    """Read a packed row back into fragments, flags and remainder."""
    if not word & F1:
        n1 = word >> 10 & 0xF
        return OracleRow((_frag(word & 0x3FF, n1),), (False,), RemainderState(word >> 14 & 7))
    w1 = _frag(word & 0x3F, word >> 6 & 7)
    if not word & F2:
        w2 = _frag(word >> 9 & 0x7F, word >> 16 & 7)
        return OracleRow((w1, w2), (True, False), RemainderState(word >> 19 & 7))
    w2 = _frag(word >> 9 & 0xF, word >> 13 & 7)
    w3 = _frag(word >> 16 & 0xF, word >> 20 & 7)
    f3 = bool(word & F3)
    frags = (w1, w2, w3)
    flags = (True, True, f3)
    return OracleRow(frags, flags, RemainderState(word >> 23 & 7))


# -- table ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DecodeTable:
    rows: np.ndarray  # uint32, shape (states, 256)

    @property
    def n_states(self) -> int:
        return self.rows.shape[0]

    @property
    def payload_bytes(self) -> int:
        return self.rows.nbytes

    def row(self, r: int, u: int) -> int:
        return int(self.rows[r, u])

    def as_lists(self) -> list[list[int]]:
        cached = self.__dict__.get("_lists")
        if cached is None:
            cached = self.rows.tolist()
            object.__setattr__(self, "_lists", cached)
        return cached

    def to_bytes(self) -> bytes:
        """State-major, then byte value; each row little-endian 32-bit."""
        return self.rows.astype("<u4").tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "DecodeTable":
        if len(data) % (256 * 4):
            raise ValueError(f"table dump of {len(data)} bytes is not a whole number of states")
        rows = np.frombuffer(data, dtype="<u4").astype(np.uint32).reshape(-1, 256)
        return cls(rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["r", "r_bits", "u", "packed", "w1", "f1", "w2", "f2", "w3", "f3", "r_next", "r_next_bits"])
        for r in range(self.n_states):
            for u in range(256):
                word = self.row(r, u)
                row = unpack_row(word)
                frags = list(row.fragments) + [""] * (3 - len(row.fragments))
                flags = [int(f) for f in row.flags] + [0] * (3 - len(row.flags))
                out.writerow([
                    r, RemainderState(r).bits, format(u, "08b"), f"0x{word:08x}",
                    frags[0], flags[0], frags[1], flags[1], frags[2], flags[2],
                    int(row.next_state), row.next_state.bits,
                ])
        return buf.getvalue()


@lru_cache(maxsize=1)
def build_table() -> DecodeTable:
    rows = np.zeros((len(RemainderState), 256), dtype=np.uint32)
    for r in RemainderState:
        for u in range(256):
            oracle = streaming_oracle(r, format(u, "08b"), max_complete=3)
            word = pack_row(oracle)
            if unpack_row(word) != _canonical(oracle):
                raise TableConstructionError(f"row ({r.name}, {u:08b}) does not survive packing")
            rows[r, u] = word
    rows.setflags(write=False)
    return DecodeTable(rows)


def _canonical(row: OracleRow) -> OracleRow:
    # Unpacking always yields three fragments once f1 = f2 = 1.
    if len(row.flags) >= 2 and row.flags[0] and row.flags[1]:
        frags = row.fragments + ("",) * (3 - len(row.fragments))
        flags = row.flags[:2] + ((row.flags[2] if len(row.flags) > 2 else False),)
        return OracleRow(frags, flags, row.next_state)
    return row


# -- decoding -------------------------------------------------------------

@dataclass(frozen=True)
class DecoderState:
    """Pending value bits ``w`` (with leading 1) and the remainder index."""

    w: int = 1
    r: int = 0

    def __post_init__(self):
        if self.w < 1:
            raise ValueError("w must keep its leading 1")
        RemainderState(self.r)

    @property
    def pending_bits(self) -> str:
        return bin(self.w)[3:]


def decode_bytes(table: DecodeTable, data, state: DecoderState | None = None) -> tuple[list[int], DecoderState]:
    """Decode whole bytes of a D2 stream, one table lookup per byte."""
    state = state or DecoderState()
    w, r = state.w, state.r
    rows = table.as_lists()
    out = []
    limit = 1 << ACCUMULATOR_BITS
    for i, byte in enumerate(bytes(data)):
        t = rows[r][byte]
        if t & F1:
            out.append((w << (t >> 6 & 7)) | (t & 0x3F))
            w = 1
            if t & F2:
                out.append((1 << (t >> 13 & 7)) | (t >> 9 & 0xF))
                n3 = t >> 20 & 7
                if t & F3:
                    out.append((1 << n3) | (t >> 16 & 0xF))
                else:
                    w = (1 << n3) | (t >> 16 & 0xF)
                r = t >> 23 & 7
            else:
                w = (1 << (t >> 16 & 7)) | (t >> 9 & 0x7F)
                r = t >> 19 & 7
        else:
            w = (w << (t >> 10 & 0xF)) | (t & 0x3FF)
            r = t >> 14 & 7
        if w >= limit or (out and out[-1] >= limit):
            raise StreamCorruptionError(i, f"decoded value exceeds {ACCUMULATOR_BITS} bits")
    return out, DecoderState(w, r)


def decode_bytes_fast(table: DecodeTable, data, state: DecoderState | None = None) -> tuple[np.ndarray, DecoderState]:
    """Compiled version of :func:`decode_bytes`; returns a uint64 array."""
    from ._kernels import byte_kernel

    return _run(byte_kernel, table.rows, data, state)


def decode_bits_fast(data, state: DecoderState | None = None) -> tuple[np.ndarray, DecoderState]:
    """Compiled bit-serial decoder, the baseline for the byte table."""
    from ._kernels import bit_kernel

    return _run(bit_kernel, bit_step_arrays(), data, state)


def _run(kernel, tables, data, state):
    state = state or DecoderState()
    if state.w >= 1 << ACCUMULATOR_BITS:
        raise ValueError("pending value wider than the accumulator")
    buf = np.frombuffer(bytes(data), dtype=np.uint8) if not isinstance(data, np.ndarray) else data
    out = np.empty(3 * buf.size, dtype=np.uint64)
    n, w, r, bad = kernel(tables, buf, out, np.uint64(state.w), state.r)
    if bad >= 0:
        raise StreamCorruptionError(int(bad), f"decoded value exceeds {ACCUMULATOR_BITS} bits")
    return out[:n], DecoderState(int(w), int(r))


@lru_cache(maxsize=1)
def bit_step_arrays() -> np.ndarray:
    """``_STEP`` as an ``(8, 2, 4)`` int array: emitted value, length, done, next."""
    arr = np.zeros((len(RemainderState), 2, 4), dtype=np.int64)
    for (s, b), (out, done, nxt) in _STEP.items():
        arr[s, b] = (int(out, 2) if out else 0, len(out), int(done), int(nxt))
    arr.setflags(write=False)
    return arr
