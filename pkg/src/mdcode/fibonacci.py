"""Fibonacci codes of higher order, used as ranked codeword sets.

``Fib m`` consists of ``1^m`` and every word containing ``1^m`` exactly once,
as its suffix. Only ranking is provided (no Zeckendorf-style integer coder):
for text compression the ``i``-th most frequent token simply gets the
``i``-th codeword.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from .automaton import DEAD, PrefixCodeAutomaton

__all__ = [
    "FibSpec",
    "KDeltaGroup",
    "fib_numbers",
    "fib_is_codeword",
    "fib_enumerate",
    "fib_rank_to_codeword",
    "fib_codeword_to_rank",
    "fib_parse_kdelta_groups",
]


@dataclass(frozen=True)
class FibSpec:
    order: int

    def __post_init__(self):
        if int(self.order) != self.order or self.order < 2:
            raise ValueError(f"Fibonacci code order must be an integer >= 2, got {self.order}")

    @classmethod
    def parse(cls, text: str) -> "FibSpec":
        text = text.strip()
        if not text.startswith("Fib") or not text[3:].isdigit():
            raise ValueError(f"not a Fibonacci code name: {text!r}")
        return cls(int(text[3:]))

    def __str__(self):
        return f"Fib{self.order}"

    @cached_property
    def automaton(self) -> PrefixCodeAutomaton:
        return _automaton(self.order)

    @cached_property
    def splitter(self) -> re.Pattern:
        return re.compile(f"[01]*?1{{{self.order}}}")


@lru_cache(maxsize=None)
def _automaton(m: int) -> PrefixCodeAutomaton:
    # State c = number of trailing ones seen so far (c < m).
    accept = m
    rows = [(0, c + 1 if c + 1 < m else accept) for c in range(m)]
    rows.append((DEAD, DEAD))
    return PrefixCodeAutomaton(rows, accept)


@lru_cache(maxsize=None)
def _fib_table(m: int) -> list[int]:
    return [1]  # index 0 holds F_1


def fib_numbers(m: int, n: int) -> int:
    """Order-``m`` Fibonacci number ``F_n``: ``F_1 = 1``, ``F_n = 0`` for ``-m < n <= 0``."""
    if m < 1:
        raise ValueError("order must be >= 1")
    if n <= 0:
        if n <= -m:
            raise ValueError(f"F_{n} is undefined for order {m}")
        return 0
    table = _fib_table(m)
    while len(table) < n:
        k = len(table)  # computing F_{k+1}
        table.append(sum(table[max(0, k - m) : k]))
    return table[n - 1]


def fib_is_codeword(spec: FibSpec, w: str) -> bool:
    block = "1" * spec.order
    return w.endswith(block) and w.find(block) == len(w) - spec.order


def fib_enumerate(spec: FibSpec, max_len: int) -> list[str]:
    if max_len < spec.order:
        raise ValueError(f"max_len must be >= {spec.order}")
    return spec.automaton.enumerate(max_len)


def fib_rank_to_codeword(spec: FibSpec, r: int) -> str:
    return spec.automaton.unrank(r)


def fib_codeword_to_rank(spec: FibSpec, w: str) -> int:
    return spec.automaton.rank(w)


class KDeltaGroup(NamedTuple):
    """``k`` coded as ``0^(k-1) 1``, then ``delta`` as ``1^delta 0`` or ``1^(m-1)``."""

    k: int
    delta: int

    def encode(self, m: int) -> str:
        tail = "1" * self.delta + ("" if self.delta == m - 1 else "0")
        return "0" * (self.k - 1) + "1" + tail


def fib_parse_kdelta_groups(spec: FibSpec, w: str) -> list[KDeltaGroup]:
    """Split a Fib-m codeword into whole ``(k, delta)``-groups."""
    if not fib_is_codeword(spec, w):
        raise ValueError(f"not a codeword of {spec}: {w!r}")
    m = spec.order
    groups = []
    pos, n = 0, len(w)
    while pos < n:
        one = w.find("1", pos)
        k = one - pos + 1
        pos = one + 1
        delta = 0
        while delta < m - 1 and w[pos] == "1":
            delta += 1
            pos += 1
        if delta < m - 1:
            pos += 1  # the closing zero of 1^delta 0
        groups.append(KDeltaGroup(k, delta))
    return groups
