"""Multi-delimiter codes, higher-order Fibonacci codes and the lower (2,3)-code."""

from .codes import parse_code, parse_code_list
from .fibonacci import FibSpec
from .multidelim import (
    CodeSpec,
    CodewordError,
    TruncatedStreamError,
    codeword_to_rank,
    decode_int,
    decode_stream,
    encode_int,
    encode_stream,
    enumerate_codewords,
    is_codeword,
    rank_to_codeword,
)

__all__ = [
    "CodeSpec",
    "FibSpec",
    "CodewordError",
    "TruncatedStreamError",
    "parse_code",
    "parse_code_list",
    "encode_int",
    "decode_int",
    "encode_stream",
    "decode_stream",
    "is_codeword",
    "enumerate_codewords",
    "rank_to_codeword",
    "codeword_to_rank",
]
