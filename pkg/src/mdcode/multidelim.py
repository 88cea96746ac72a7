"""Multi-delimiter codes ``D_{m1,...,mt}``.

A codeword is either a short word ``1^m 0`` with ``m`` in the delimiter set,
or a word that does not start with such a short word, ends with a delimiter
``0 1^m 0`` and contains no delimiter anywhere else.

Integers map one-to-one into codewords: runs of ones inside the binary
expansion are renumbered through ``phi`` (which skips the delimiter lengths)
so no delimiter can appear before the end of the word. With one delimiter
the map is onto; with several, a few codewords (those whose residual would
have kept its own delimiter) are the image of no integer and are rejected
by :func:`decode_int`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from .automaton import DEAD, PrefixCodeAutomaton

__all__ = [
    "CodeSpec",
    "CodewordError",
    "TruncatedStreamError",
    "DeltaKGroup",
    "phi",
    "phi_inv",
    "is_codeword",
    "encode_int",
    "decode_int",
    "parse_groups",
    "length_bound",
    "enumerate_codewords",
    "rank_to_codeword",
    "codeword_to_rank",
    "encode_stream",
    "decode_stream",
]


class CodewordError(ValueError):
    """A bit string is not a codeword, or decodes inconsistently."""


class TruncatedStreamError(ValueError):
    """Trailing bits of a stream do not form a complete codeword.

    ``decoded`` holds the values recovered before the bad tail and
    ``remaining_bits`` its length.
    """

    def __init__(self, decoded, remaining_bits):
        super().__init__(f"{remaining_bits} trailing bits form no complete codeword")
        self.decoded = decoded
        self.remaining_bits = remaining_bits


@dataclass(frozen=True)
class CodeSpec:
    """Ascending delimiter run lengths ``m1 < ... < mt``."""

    delims: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(m) for m in self.delims)
        object.__setattr__(self, "delims", d)
        if not d:
            raise ValueError("a code needs at least one delimiter")
        if d[0] < 1 or any(a >= b for a, b in zip(d, d[1:])):
            raise ValueError(f"delimiters must be strictly ascending positive integers: {d}")

    @classmethod
    def parse(cls, text: str) -> "CodeSpec":
        """Parse ``"D2"`` or ``"D2,3,5"``."""
        text = text.strip()
        if not text.startswith("D"):
            raise ValueError(f"not a multi-delimiter code name: {text!r}")
        try:
            return cls(tuple(int(p) for p in text[1:].split(",")))
        except ValueError as exc:
            raise ValueError(f"bad code name {text!r}: {exc}") from None

    def __str__(self):
        return "D" + ",".join(map(str, self.delims))

    @property
    def t(self) -> int:
        return len(self.delims)

    @property
    def m1(self) -> int:
        return self.delims[0]

    @cached_property
    def _delim_set(self) -> frozenset:
        return frozenset(self.delims)

    @cached_property
    def _long_runs(self) -> re.Pattern:
        # phi and phi_inv fix every n < m1, so shorter runs need no visit
        return re.compile(f"1{{{self.m1},}}")

    @cached_property
    def _phi_runs(self):
        return _RunMapper(lambda n: phi(self, n))

    @cached_property
    def _phi_inv_runs(self):
        return _RunMapper(lambda n: phi_inv(self, n))

    @cached_property
    def automaton(self) -> PrefixCodeAutomaton:
        return _automaton(self.delims)

    @cached_property
    def splitter(self) -> re.Pattern:
        """Regex matching exactly one codeword at the current position."""
        runs = "|".join(f"1{{{m}}}" for m in self.delims)
        return re.compile(f"(?:{runs})0|[01]*?0(?:{runs})0")


@lru_cache(maxsize=None)
def _automaton(delims: tuple[int, ...]) -> PrefixCodeAutomaton:
    # State 0: previous bit was 0 (or word start). State c in 1..cap: inside a
    # run of c ones, with cap standing for "longer than every delimiter".
    cap = delims[-1] + 1
    accept = cap + 1
    rows = [(0, 1)]
    for c in range(1, cap + 1):
        rows.append((accept if c in delims else 0, min(c + 1, cap)))
    rows.append((DEAD, DEAD))
    return PrefixCodeAutomaton(rows, accept)


# -- phi ------------------------------------------------------------------

def phi(spec: CodeSpec, i: int) -> int:
    """The ``i``-th positive integer not in the delimiter set."""
    if i < 1:
        raise ValueError(f"phi is defined for i >= 1, got {i}")
    j = i
    for m in spec.delims:
        if m <= j:
            j += 1
        else:
            break
    return j


def phi_inv(spec: CodeSpec, j: int) -> int:
    if j < 1 or j in spec._delim_set:
        raise ValueError(f"phi_inv undefined at {j} for {spec}")
    return j - sum(1 for m in spec.delims if m < j)


# -- membership -----------------------------------------------------------

def is_codeword(spec: CodeSpec, w: str) -> bool:
    """Membership straight from the definition, using substring tests."""
    for m in spec.delims:
        if w == "1" * m + "0":
            return True
    if any(w.startswith("1" * m + "0") for m in spec.delims):
        return False
    ends = False
    for m in spec.delims:
        pattern = "0" + "1" * m + "0"
        if w.endswith(pattern):
            ends = True
        # An occurrence ending before the last bit is not the suffix.
        if pattern in w[:-1]:
            return False
    return ends


# -- integer bijection ----------------------------------------------------

def _ones(n: int) -> str:
    return "1" * n


def _informative_suffix(spec: CodeSpec, s: str) -> int | None:
    """Length of the trailing run if ``s`` ends with ``0 1^m 0`` for m > m1."""
    if not s.endswith("10"):
        return None
    body = s[:-1]
    run = len(body) - len(body.rstrip("1"))
    if run in spec.delims[1:] and len(body) > run and body[-run - 1] == "0":
        return run
    return None


class _RunMapper:
    """Regex replacement callback sending ``1^n`` to ``1^f(n)``, memoized."""

    def __init__(self, f):
        self._f = f
        self._cache: dict[str, str] = {}

    def __call__(self, match: re.Match) -> str:
        run = match.group()
        out = self._cache.get(run)
        if out is None:
            out = self._cache[run] = _ones(self._f(len(run)))
        return out


def _substitute(spec: CodeSpec, s: str, mapper: _RunMapper, keep_last: bool) -> str:
    """Apply ``mapper`` to every run of ones, optionally sparing the last."""
    tail = ""
    if keep_last:
        cut = s.rfind("0", 0, len(s) - 1) + 1
        s, tail = s[:cut], s[cut:]
    return spec._long_runs.sub(mapper, s) + tail


def encode_int(spec: CodeSpec, x: int) -> str:
    """Codeword of the positive integer ``x``."""
    if x < 1:
        raise ValueError(f"only positive integers are encodable, got {x}")
    residual = bin(x)[3:]
    m1 = spec.m1
    if "1" not in residual:
        return residual + _ones(m1) + "0"
    if _is_short_informative(spec, residual.lstrip("0")):
        return residual
    keep = _informative_suffix(spec, residual) is not None
    out = _substitute(spec, residual, spec._phi_runs, keep)
    if keep:
        return out
    return out + "0" + _ones(m1) + "0"


def decode_int(spec: CodeSpec, w: str) -> int:
    """Inverse of :func:`encode_int`."""
    if not is_codeword(spec, w):
        raise CodewordError(f"not a codeword of {spec}: {w!r}")
    m1 = spec.m1
    tail = _ones(m1) + "0"
    if w.endswith(tail) and "1" not in w[: -len(tail)]:
        return int("1" + w[: -len(tail)], 2)
    if w.endswith("0" + tail):
        body = w[: -len(tail) - 1]
        keep = False
    else:
        body = w
        keep = True
    try:
        body = _substitute(spec, body, spec._phi_inv_runs, keep)
    except ValueError:
        raise CodewordError(f"delimiter run inside codeword body: {w!r}") from None
    if not keep and (_informative_suffix(spec, body) is not None or _is_short_informative(spec, body)):
        # The encoder would have kept this residual's own delimiter instead.
        raise CodewordError(f"codeword {w!r} is not the image of any integer")
    return int("1" + body, 2)


def _is_short_informative(spec: CodeSpec, s: str) -> bool:
    return s.endswith("0") and s[:-1] == _ones(len(s) - 1) and len(s) - 1 in spec.delims[1:]


# -- (delta, k) groups ------------------------------------------------------

class DeltaKGroup(NamedTuple):
    """A ``(delta, k)`` pair; ``delta`` in ``0..2**d`` and ``k >= 1``."""

    delta: int
    k: int

    def encode(self, d: int = 0) -> str:
        if self.delta == 0:
            head = "0"
        else:
            head = "1" + (format(self.delta - 1, f"0{d}b") if d else "")
        return head + _ones(self.k - 1) + "0"


def parse_groups(spec: CodeSpec, w: str, d: int = 0) -> list[DeltaKGroup]:
    """Greedy left-to-right split of a codeword into ``(delta, k)``-groups.

    ``delta`` is coded as ``0`` or as a ``d+1``-bit word starting with 1;
    ``k`` is coded in unary as ``1^(k-1) 0``.
    """
    if not 0 <= d < spec.m1:
        raise ValueError(f"need 0 <= d < {spec.m1}, got {d}")
    if not is_codeword(spec, w):
        raise CodewordError(f"not a codeword of {spec}: {w!r}")
    groups = []
    pos, n = 0, len(w)
    while pos < n:
        if w[pos] == "0":
            delta = 0
            pos += 1
        else:
            if pos + d + 1 > n:
                raise CodewordError(f"incomplete group at bit {pos} of {w!r}")
            delta = 1 + (int(w[pos + 1 : pos + d + 1], 2) if d else 0)
            pos += d + 1
        end = w.find("0", pos)
        if end < 0:
            raise CodewordError(f"incomplete group at bit {pos} of {w!r}")
        groups.append(DeltaKGroup(delta, end - pos + 1))
        pos = end + 1
    return groups


def length_bound(spec: CodeSpec, i: int) -> int:
    """Upper bound on ``len(encode_int(spec, i))``.

    The base term ``log2 i`` accounts for the residual bits themselves; each
    run of ones grows by at most ``t`` and there are at most ``log2(i)/2``
    runs, plus room for an appended delimiter.
    """
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    return math.ceil((1 + spec.t / 2) * math.log2(i) + spec.m1 + 2)


# -- ranking --------------------------------------------------------------

def enumerate_codewords(spec: CodeSpec, max_len: int) -> list[str]:
    """All codewords up to ``max_len`` bits, shortest first then lexicographic."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    return spec.automaton.enumerate(max_len)


def rank_to_codeword(spec: CodeSpec, r: int) -> str:
    return spec.automaton.unrank(r)


def codeword_to_rank(spec: CodeSpec, w: str) -> int:
    try:
        return spec.automaton.rank(w)
    except ValueError:
        raise CodewordError(f"not a codeword of {spec}: {w!r}") from None


# -- streams --------------------------------------------------------------

def encode_stream(spec: CodeSpec, xs) -> str:
    return "".join(encode_int(spec, x) for x in xs)


def split_stream(spec: CodeSpec, bits: str) -> list[str]:
    """Cut a concatenation of codewords at codeword boundaries."""
    match = spec.splitter.match
    words = []
    pos, n = 0, len(bits)
    while pos < n:
        m = match(bits, pos)
        if m is None:
            raise TruncatedStreamError(words, n - pos)
        words.append(m.group())
        pos = m.end()
    return words


def decode_stream(spec: CodeSpec, bits: str) -> list[int]:
    try:
        words = split_stream(spec, bits)
    except TruncatedStreamError as exc:
        exc.decoded = [decode_int(spec, w) for w in exc.decoded]
        raise
    return [decode_int(spec, w) for w in words]
