"""Counting, ranking and enumeration for prefix codes given by a DFA.

Both code families in this package are regular prefix codes: a word is a
codeword exactly when a small automaton reaches its accepting state on the
last bit (and never earlier). Completion counts over that automaton give
per-length codeword counts and let us walk the canonical order
(shorter first, then lexicographic with ``0 < 1``) without materialising it.
"""

from __future__ import annotations

from itertools import count

__all__ = ["PrefixCodeAutomaton"]

DEAD = -1


class PrefixCodeAutomaton:
    """A prefix code recognised by a binary DFA.

    ``transitions[s] = (next_on_0, next_on_1)``; ``accept`` has no outgoing
    edges (codewords are prefix-free) and ``DEAD`` (-1) absorbs everything.
    Completion tables are grown on demand and cached, so instances are meant
    to be long-lived and shared.
    """

    def __init__(self, transitions, accept: int, start: int = 0):
        self.transitions = [tuple(t) for t in transitions]
        self.accept = accept
        self.start = start
        n = len(self.transitions)
        # _completions[L][s]: strings of length L driving s into accept on
        # their last bit.
        self._completions = [[1 if s == accept else 0 for s in range(n)]]
        self._cumulative = [0]  # codewords of length <= L
        self._cache: list[str] = []
        self._cache_iter = None

    # -- counting ---------------------------------------------------------
    def _grow(self, length: int) -> None:
        table = self._completions
        n = len(self.transitions)
        while len(table) <= length:
            prev = table[-1]
            row = [0] * n
            for s, (t0, t1) in enumerate(self.transitions):
                if s == self.accept:
                    continue
                row[s] = (prev[t0] if t0 != DEAD else 0) + (prev[t1] if t1 != DEAD else 0)
            table.append(row)
            self._cumulative.append(self._cumulative[-1] + row[self.start])

    def completions(self, state: int, length: int) -> int:
        if state == DEAD or length < 0:
            return 0
        self._grow(length)
        return self._completions[length][state]

    def count(self, length: int) -> int:
        """Number of codewords of exactly ``length`` bits."""
        return self.completions(self.start, length)

    def cumulative(self, length: int) -> int:
        """Number of codewords of at most ``length`` bits."""
        if length < 0:
            return 0
        self._grow(length)
        return self._cumulative[length]

    # -- membership -------------------------------------------------------
    def run(self, w: str) -> int:
        s = self.start
        for i, b in enumerate(w):
            if s == self.accept or s == DEAD:
                return DEAD
            s = self.transitions[s][b == "1"]
        return s

    def accepts(self, w: str) -> bool:
        return bool(w) and self.run(w) == self.accept

    # -- ranking ----------------------------------------------------------
    def unrank_in_length(self, length: int, index: int) -> str:
        """The ``index``-th (0-based) codeword of ``length`` bits in lex order."""
        if not 0 <= index < self.count(length):
            raise IndexError(f"no codeword #{index} of length {length}")
        out = []
        s = self.start
        for remaining in range(length - 1, -1, -1):
            t0, t1 = self.transitions[s]
            c0 = self.completions(t0, remaining)
            if index < c0:
                out.append("0")
                s = t0
            else:
                index -= c0
                out.append("1")
                s = t1
        return "".join(out)

    def unrank(self, rank: int) -> str:
        """Codeword with 1-based canonical rank ``rank``."""
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        if rank <= len(self._cache):
            return self._cache[rank - 1]
        length = 1
        # Codeword counts grow geometrically, so this scan is short.
        while self.cumulative(length) < rank:
            length += 1
        return self.unrank_in_length(length, rank - 1 - self.cumulative(length - 1))

    def rank(self, w: str) -> int:
        """1-based canonical rank of codeword ``w``; ValueError otherwise."""
        if not self.accepts(w):
            raise ValueError(f"not a codeword: {w!r}")
        index = 0
        s = self.start
        for pos, b in enumerate(w):
            t0, t1 = self.transitions[s]
            if b == "1":
                index += self.completions(t0, len(w) - pos - 1)
                s = t1
            else:
                s = t0
        return self.cumulative(len(w) - 1) + index + 1

    # -- enumeration ------------------------------------------------------
    def words_of_length(self, length: int):
        """Yield all codewords of ``length`` bits in lexicographic order."""
        if self.count(length) == 0:
            return
        stack = [(self.start, "")]
        while stack:
            s, prefix = stack.pop()
            remaining = length - len(prefix)
            if remaining == 0:
                yield prefix
                continue
            t0, t1 = self.transitions[s]
            # Push 1 first so 0 is popped first.
            if self.completions(t1, remaining - 1):
                stack.append((t1, prefix + "1"))
            if self.completions(t0, remaining - 1):
                stack.append((t0, prefix + "0"))

    def iter_codewords(self):
        """Yield every codeword in canonical order (infinite)."""
        for length in count(1):
            yield from self.words_of_length(length)

    def enumerate(self, max_len: int) -> list[str]:
        return [w for n in range(1, max_len + 1) for w in self.words_of_length(n)]

    def first(self, n: int) -> list[str]:
        """The ``n`` lowest-ranked codewords (cached across calls)."""
        if self._cache_iter is None:
            self._cache_iter = self.iter_codewords()
        while len(self._cache) < n:
            self._cache.append(next(self._cache_iter))
        return self._cache[:n]
