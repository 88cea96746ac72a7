"""Code names (``D2,3,5``, ``Fib3``) and the operations shared by both families."""

from __future__ import annotations

from .fibonacci import FibSpec, fib_is_codeword
from .multidelim import CodeSpec, TruncatedStreamError, is_codeword

__all__ = ["parse_code", "parse_code_list", "split_codewords", "code_is_codeword"]


def parse_code(text: str) -> CodeSpec | FibSpec:
    text = text.strip()
    if text.startswith("Fib"):
        return FibSpec.parse(text)
    return CodeSpec.parse(text)


def parse_code_list(text: str) -> list[CodeSpec | FibSpec]:
    """Parse a comma list like ``Fib3,D2,D2,3,D2,3,5``.

    Bare integers extend the preceding ``D`` code, so ``D2,3`` is one code.
    """
    groups: list[list[str]] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise ValueError(f"empty item in code list {text!r}")
        if part.startswith(("D", "Fib")):
            groups.append([part])
        elif part.isdigit() and groups and groups[-1][0].startswith("D"):
            groups[-1].append(part)
        else:
            raise ValueError(f"cannot parse {part!r} in code list {text!r}")
    return [parse_code(",".join(g)) for g in groups]


def code_is_codeword(code: CodeSpec | FibSpec, w: str) -> bool:
    if isinstance(code, FibSpec):
        return fib_is_codeword(code, w)
    return is_codeword(code, w)


def split_codewords(code: CodeSpec | FibSpec, bits: str) -> list[str]:
    """Cut a concatenation of codewords of either family."""
    match = code.splitter.match
    words, pos, n = [], 0, len(bits)
    while pos < n:
        m = match(bits, pos)
        if m is None:
            raise TruncatedStreamError(words, n - pos)
        words.append(m.group())
        pos = m.end()
    return words
