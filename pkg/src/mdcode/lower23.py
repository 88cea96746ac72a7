"""The lower (2,3)-representation and its prefix code.

Every ``x`` coprime with 6 unfolds as ``x_i = 2**n_i + 3**k_i * x_{i+1}``
with ``n_i`` one or two below ``floor(log2 x_i)``, ending at ``x_t`` in
``{1, 2}``. Each step is kept as a pair ``(delta_i, k_i)`` where
``delta_i = floor(log2(3**k_i * x_{i+1})) - n_i`` is always 0, 1 or 2.

Pairs are written last-first as ``(delta, k)``-groups; ``110`` is appended
unless the final group already ends in the delimiter ``0110``.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Lower23Factorization",
    "nat_to_coprime",
    "coprime_to_nat",
    "lower23_factorize",
    "lower23_refold",
    "lower23_encode",
    "lower23_decode",
    "is_lower23_codeword",
]

_DELTA_CODE = {2: "0", 1: "11", 0: "10"}


@dataclass(frozen=True)
class Lower23Factorization:
    """``pairs[i] = (delta_i, k_i)`` in extraction order; ``terminal`` is ``x_t``."""

    pairs: tuple[tuple[int, int], ...]
    terminal: int


def nat_to_coprime(n: int) -> int:
    """The ``n``-th positive integer coprime with 6 (1, 5, 7, 11, ...)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 3 * n - (n % 2) - 1


def coprime_to_nat(x: int) -> int:
    if x < 1 or x % 2 == 0 or x % 3 == 0:
        raise ValueError(f"{x} is not coprime with 6")
    return (x + 2) // 3


def lower23_factorize(x: int) -> Lower23Factorization:
    if x < 1 or x % 2 == 0 or x % 3 == 0:
        raise ValueError(f"{x} is not a positive integer coprime with 6")
    pairs = []
    while x not in (1, 2):
        top = x.bit_length() - 1
        n_i = top - 1 if (x - (1 << (top - 1))) % 3 == 0 else top - 2
        rest = x - (1 << n_i)
        delta = rest.bit_length() - 1 - n_i
        k = 0
        while rest % 3 == 0:
            rest //= 3
            k += 1
        assert k >= 1 and 0 <= delta <= 2, (x, n_i, k, delta)
        pairs.append((delta, k))
        x = rest
    fact = Lower23Factorization(tuple(pairs), x)
    assert (x == 2) == (bool(pairs) and pairs[-1] == (2, 1))
    return fact


def lower23_refold(fact: Lower23Factorization) -> int:
    x = fact.terminal
    for delta, k in reversed(fact.pairs):
        y = 3**k * x
        x = (1 << (y.bit_length() - 1 - delta)) + y
    return x


def _k_code(delta: int, k: int, first: bool, last: bool) -> str:
    inflate = (delta == 1 and not first) or (delta != 1 and k >= 3 and not last)
    return "1" * (k if inflate else k - 1) + "0"


def lower23_encode(n: int) -> str:
    pairs = lower23_factorize(nat_to_coprime(n)).pairs
    written = pairs[::-1]
    parts = []
    for pos, (delta, k) in enumerate(written):
        first, last = pos == 0, pos == len(written) - 1
        assert not (first and delta == 1 and k == 1)
        parts.append(_DELTA_CODE[delta] + _k_code(delta, k, first, last))
    if not (written and written[-1][1] == 3 and written[-1][0] != 1):
        parts.append("110")
    return "".join(parts)


def _parse(w: str) -> list[tuple[int, int]]:
    """Split into ``(delta, ones_in_k_code)`` groups."""
    groups = []
    pos, n = 0, len(w)
    while pos < n:
        if w[pos] == "0":
            delta, pos = 2, pos + 1
        elif w.startswith("10", pos):
            delta, pos = 0, pos + 2
        elif w.startswith("11", pos):
            delta, pos = 1, pos + 2
        else:
            raise ValueError(f"truncated group at bit {pos} of {w!r}")
        end = w.find("0", pos)
        if end < 0:
            raise ValueError(f"truncated group at bit {pos} of {w!r}")
        groups.append((delta, end - pos))
        pos = end + 1
    return groups


def lower23_decode(w: str) -> int:
    """Index ``n`` whose codeword is ``w``; ValueError if there is none."""
    groups = _parse(w)
    if groups and groups[-1] == (1, 0):
        groups.pop()  # externally appended 110
    elif not (groups and groups[-1][0] != 1 and groups[-1][1] == 2):
        raise ValueError(f"{w!r} does not end with a separating group")
    pairs = []
    last_pos = len(groups) - 1
    for pos, (delta, ones) in enumerate(groups):
        if delta == 1:
            k = ones if pos > 0 else ones + 1
        elif pos < last_pos and ones >= 3:
            k = ones
        elif pos < last_pos and ones == 2:
            raise ValueError(f"separating group inside {w!r}")
        else:
            k = ones + 1
        if k < 1:
            raise ValueError(f"empty k-code in {w!r}")
        pairs.append((delta, k))
    pairs.reverse()
    terminal = 2 if pairs and pairs[-1] == (2, 1) else 1
    x = lower23_refold(Lower23Factorization(tuple(pairs), terminal))
    try:
        n = coprime_to_nat(x)
    except ValueError:
        raise ValueError(f"{w!r} folds to {x}, not coprime with 6") from None
    if lower23_encode(n) != w:
        raise ValueError(f"{w!r} is not in the lower (2,3)-code")
    return n


def is_lower23_codeword(w: str) -> bool:
    try:
        lower23_decode(w)
    except ValueError:
        return False
    return True
