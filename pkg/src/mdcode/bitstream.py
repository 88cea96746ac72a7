"""Bit-exact reading and writing of bit sequences.

Bit strings are plain ``str`` objects over the alphabet ``"01"``; this keeps
codeword manipulation (slicing, suffix tests, concatenation) at C speed.
Packing into bytes is MSB-first: stream bit 0 is bit 7 of byte 0, and the
final partial byte is zero-padded.
"""

from __future__ import annotations

import re

__all__ = [
    "EndOfStream",
    "BitReader",
    "BitWriter",
    "parse_bits",
    "pack_bits",
    "unpack_bits",
    "iter_runs",
    "find_isolated_runs",
]

_RUN = re.compile(r"0+|1+")
_ONES = re.compile(r"1+")


class EndOfStream(EOFError):
    """Raised when a read goes past the last available bit."""


def parse_bits(text: str) -> str:
    """Parse the debug text form: ASCII 0/1 with optional spaces."""
    bits = text.replace(" ", "")
    if bits.strip("01"):
        raise ValueError(f"not a bit string: {text!r}")
    return bits


def pack_bits(bits: str) -> bytes:
    """Pack a bit string MSB-first, zero-padding the last byte."""
    if not bits:
        return b""
    nbytes = (len(bits) + 7) // 8
    return (int(bits, 2) << (8 * nbytes - len(bits))).to_bytes(nbytes, "big")


def unpack_bits(data: bytes, nbits: int | None = None) -> str:
    """Inverse of :func:`pack_bits`; ``nbits`` trims the zero padding."""
    total = 8 * len(data)
    if nbits is None:
        nbits = total
    if not 0 <= nbits <= total:
        raise ValueError(f"nbits={nbits} outside 0..{total}")
    if not data:
        return ""
    return format(int.from_bytes(data, "big"), f"0{total}b")[:nbits]


def iter_runs(bits: str):
    """Yield ``(symbol, length)`` for each maximal run, left to right."""
    for m in _RUN.finditer(bits):
        yield int(m.group()[0]), m.end() - m.start()


def find_isolated_runs(w: str) -> list[tuple[int, int]]:
    """Return ``(start, length)`` of every isolated run of ones in ``w``.

    A run of ones is isolated when it is a prefix ending before a zero, a
    suffix starting after a zero, a substring surrounded by zeros, or the
    whole word. Every maximal run satisfies one of these cases, so this is
    the list of maximal runs of ones.
    """
    return [(m.start(), m.end() - m.start()) for m in _ONES.finditer(w)]


class BitWriter:
    """Append-only bit buffer."""

    def __init__(self):
        self._chunks: list[str] = []
        self.position = 0

    def write_bits(self, bits: str) -> None:
        if bits.strip("01"):
            raise ValueError(f"not a bit string: {bits!r}")
        if bits:
            self._chunks.append(bits)
            self.position += len(bits)

    def write_uint(self, value: int, width: int) -> None:
        if value < 0 or value >> width:
            raise ValueError(f"{value} does not fit in {width} bits")
        if width:
            self.write_bits(format(value, f"0{width}b"))

    @property
    def bits(self) -> str:
        if len(self._chunks) > 1:
            self._chunks = ["".join(self._chunks)]
        return self._chunks[0] if self._chunks else ""

    def getvalue(self) -> bytes:
        return pack_bits(self.bits)


class BitReader:
    """Cursor over a bit string or an MSB-first byte sequence.

    ``nbits`` limits a byte source to its meaningful prefix so padding is never
    read. Reads past the end raise :class:`EndOfStream`; the cursor is left
    where it was.
    """

    def __init__(self, source: str | bytes, nbits: int | None = None):
        if isinstance(source, str):
            bits = parse_bits(source)
            self._bits = bits if nbits is None else bits[:nbits]
        else:
            self._bits = unpack_bits(bytes(source), nbits)
        self.position = 0

    def __len__(self) -> int:
        return len(self._bits)

    @property
    def remaining(self) -> int:
        return len(self._bits) - self.position

    def read_bit(self) -> int:
        if self.position >= len(self._bits):
            raise EndOfStream("read past end of stream")
        bit = self._bits[self.position]
        self.position += 1
        return 1 if bit == "1" else 0

    def read_bits(self, n: int) -> str:
        if n < 0:
            raise ValueError("negative read length")
        if self.position + n > len(self._bits):
            raise EndOfStream(f"need {n} bits, {self.remaining} left")
        out = self._bits[self.position : self.position + n]
        self.position += n
        return out

    def read_uint(self, width: int) -> int:
        return int(self.read_bits(width), 2) if width else 0

    def read_run(self) -> tuple[int, int]:
        """Consume the next maximal run and return ``(symbol, length)``."""
        if self.position >= len(self._bits):
            raise EndOfStream("no run left")
        m = _RUN.match(self._bits, self.position)
        self.position = m.end()
        return int(m.group()[0]), m.end() - m.start()
