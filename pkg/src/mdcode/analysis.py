"""Code density: per-length codeword counts, Kraft sums, growth, average length.

Counts for multi-delimiter codes come from the terminal-group recurrence

    f_n = T_n + sum_{k=0}^{n-2} (2 - T_{n-k}) f_k,

where ``T_n`` is the number of terminal ``(delta, k)``-groups of length ``n``
(lengths ``m_i + 1`` and ``m_i + 2``). Fibonacci code counts come from the
order-m Fibonacci numbers. Everything is exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .fibonacci import FibSpec, fib_numbers
from .multidelim import CodeSpec

__all__ = [
    "DensityProfile",
    "terminal_census",
    "count_codewords",
    "cumulative_count",
    "density_profile",
    "d2_recurrence_check",
    "kraft_partial_sum",
    "growth_rate",
    "length_histogram",
    "avg_codeword_length",
]


@dataclass(frozen=True)
class DensityProfile:
    code: CodeSpec | FibSpec
    f: tuple[int, ...]  # f[n] for n = 0..len-1
    s: tuple[int, ...]


def terminal_census(spec: CodeSpec) -> dict[int, int]:
    """Map length -> number of terminal groups of that length."""
    return dict(Counter(m + e for m in spec.delims for e in (1, 2)))


@lru_cache(maxsize=None)
def _md_counts(delims: tuple[int, ...]) -> list[int]:
    return [0]


def _extend_md(spec: CodeSpec, n: int) -> list[int]:
    f = _md_counts(spec.delims)
    if n < len(f):
        return f
    T = terminal_census(spec)
    # Expanded form: T_n + 2*(f_0 + ... + f_{n-2})
    #                - sum_i f_{n-m_i-1} - sum_i f_{n-m_i-2}.
    prefix = sum(f[:-1]) if len(f) > 1 else 0  # f_0 + ... + f_{len-2}
    while len(f) <= n:
        k = len(f)
        value = T.get(k, 0) + 2 * prefix
        for length, mult in T.items():
            if k - length >= 0:
                value -= mult * f[k - length]
        prefix += f[k - 1]
        f.append(value)
    return f


def count_codewords(code: CodeSpec | FibSpec, n: int) -> int:
    """Number of codewords of length exactly ``n``."""
    if n < 0:
        raise ValueError("length must be >= 0")
    if isinstance(code, FibSpec):
        # Lengths start at m with the single word 1^m.
        idx = n - code.order + 1
        return fib_numbers(code.order, idx) if idx >= 1 else 0
    return _extend_md(code, n)[n]


def cumulative_count(code: CodeSpec | FibSpec, n: int) -> int:
    return sum(count_codewords(code, i) for i in range(n + 1))


def density_profile(code: CodeSpec | FibSpec, n_max: int) -> DensityProfile:
    f = [count_codewords(code, i) for i in range(n_max + 1)]
    s, acc = [], 0
    for v in f:
        acc += v
        s.append(acc)
    return DensityProfile(code, tuple(f), tuple(s))


def d2_recurrence_check(n_max: int) -> bool:
    """Confirm the short D2 recurrences against the general count.

    ``f_n = f_{n-1} + f_{n-2} + f_{n-3} + f_{n-6}`` for ``n >= 7`` and the same
    recurrence on cumulative counts for ``n >= 6``.
    """
    if n_max < 7:
        raise ValueError("n_max must be >= 7")
    p = density_profile(CodeSpec((2,)), n_max)

    def at(seq, i):
        return seq[i] if i >= 0 else 0

    f_ok = all(
        p.f[n] == at(p.f, n - 1) + at(p.f, n - 2) + at(p.f, n - 3) + at(p.f, n - 6)
        for n in range(7, n_max + 1)
    )
    s_ok = all(
        p.s[n] == at(p.s, n - 1) + at(p.s, n - 2) + at(p.s, n - 3) + at(p.s, n - 6)
        for n in range(6, n_max + 1)
    )
    return f_ok and s_ok


def kraft_partial_sum(code: CodeSpec | FibSpec, n_max: int) -> Fraction:
    """Exact ``sum_{n <= n_max} f_n / 2**n``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    num = 0
    for n in range(1, n_max + 1):
        num += count_codewords(code, n) << (n_max - n)
    return Fraction(num, 1 << n_max)


def growth_rate(code: CodeSpec | FibSpec, n_probe: int = 256) -> float:
    """Ratio ``f_{n+1} / f_n``: converges to the dominant recurrence root."""
    a = count_codewords(code, n_probe)
    if a == 0:
        raise ValueError(f"no codewords of length {n_probe}")
    return float(Fraction(count_codewords(code, n_probe + 1), a))


def length_histogram(code: CodeSpec | FibSpec, n_symbols: int) -> list[tuple[int, int]]:
    """``(length, how_many)`` for the ``n_symbols`` lowest-ranked codewords."""
    out = []
    left = n_symbols
    n = 0
    while left > 0:
        n += 1
        c = count_codewords(code, n)
        if c:
            take = min(c, left)
            out.append((n, take))
            left -= take
    return out


def avg_codeword_length(code: CodeSpec | FibSpec, probabilities) -> float:
    """Expected codeword length when rank ``i`` gets probability ``p[i-1]``."""
    p = np.asarray(probabilities, dtype=float)
    if p.ndim != 1:
        raise ValueError("probabilities must be one-dimensional")
    if p.size == 0:
        return 0.0
    if (p < 0).any():
        raise ValueError("probabilities must be nonnegative")
    if p.sum() > 1 + 1e-9:
        raise ValueError("probabilities sum to more than 1")
    if (np.diff(p) > 0).any():
        raise ValueError("probabilities must be sorted in descending order")
    total, start = 0.0, 0
    for length, how_many in length_histogram(code, p.size):
        total += length * p[start : start + how_many].sum()
        start += how_many
    return float(total)
