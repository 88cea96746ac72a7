"""Regenerate tests/data/oracles.json from the brute-force oracles.

Run from the repository root: ``python scripts/freeze_oracles.py``.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402

MAX_LEN = 14
MD_CODES = {
    "D1": (1,), "D1,2": (1, 2), "D1,3": (1, 3), "D2": (2,), "D2,3": (2, 3),
    "D2,4": (2, 4), "D2,5": (2, 5), "D2,3,4": (2, 3, 4), "D2,3,5": (2, 3, 5),
    "D2,4,5": (2, 4, 5), "D2,4,6": (2, 4, 6), "D3": (3,),
}
FIB_CODES = {"Fib2": 2, "Fib3": 3, "Fib4": 4}


def main():
    counts, first = {}, {}
    for name, delims in MD_CODES.items():
        member = lambda w, d=delims: oracles.md_member(d, w)  # noqa: E731
        counts[name] = oracles.brute_counts(member, MAX_LEN)
        first[name] = oracles.brute_enumerate(member, 10)
    for name, m in FIB_CODES.items():
        member = lambda w, m=m: oracles.fib_member(m, w)  # noqa: E731
        counts[name] = oracles.brute_counts(member, MAX_LEN)
        first[name] = oracles.brute_enumerate(member, 10)
    lower23 = {x: oracles.lower23_pairs(x) for x in range(1, 2000) if x % 2 and x % 3}
    out = {
        "max_len": MAX_LEN,
        "counts": counts,
        "enumeration_to_10": first,
        "lower23_pairs": {str(x): [list(map(list, p)), t] for x, (p, t) in lower23.items()},
    }
    path = ROOT / "tests" / "data" / "oracles.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
