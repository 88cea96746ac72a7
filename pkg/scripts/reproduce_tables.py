"""Print the reference tables this package reproduces.

    python scripts/reproduce_tables.py [lists|lower23|counts|decoder]

With no argument every table is printed.
"""

import sys

from mdcode.analysis import cumulative_count, growth_rate
from mdcode.codes import parse_code
from mdcode.fastdecode import RemainderState, build_table, unpack_row
from mdcode.lower23 import lower23_encode, lower23_factorize, nat_to_coprime

LIST_CODES = ["Fib2", "D1", "D1,2", "Fib3", "D2", "D2,3", "D2,3,4"]
COUNT_CODES = [
    "Fib2", "D1", "D1,2", "D1,3", "Fib3", "D2", "D2,3", "D2,4", "D2,5",
    "D2,3,4", "D2,3,5", "D2,4,5", "D2,4,6", "Fib4", "D3",
]
COUNT_N = [2, 3, 4, 5, 6, 7, 8, 15]
DECODER_INPUTS = [
    (RemainderState.EMPTY, 0b11000111),
    (RemainderState.RUN, 0b01101011),
    (RemainderState.ZERO_ONE_ONE, 0b11001011),
    (RemainderState.ZERO_ONE_ONE, 0b11101101),
    (RemainderState.ONE, 0b10011000),
]


def codeword_lists():
    columns = [parse_code(c).automaton.enumerate(7) for c in LIST_CODES]
    print("index " + " ".join(f"{c:>8}" for c in LIST_CODES))
    for i in range(max(map(len, columns))):
        cells = [col[i] if i < len(col) else "" for col in columns]
        print(f"{i + 1:5d} " + " ".join(f"{w:>8}" for w in cells))


def lower23_rows():
    print(" n   x  pairs                 terminal  codeword")
    for n in range(1, 16):
        x = nat_to_coprime(n)
        fact = lower23_factorize(x)
        pairs = " ".join(f"({d},{k})" for d, k in fact.pairs) or "-"
        print(f"{n:2d} {x:3d}  {pairs:<20}  {fact.terminal:8d}  {lower23_encode(n)}")


def cumulative_counts():
    print(f"{'code':8} {'base':>6} " + " ".join(f"{n:>5}" for n in COUNT_N))
    for name in COUNT_CODES:
        code = parse_code(name)
        cells = " ".join(f"{cumulative_count(code, n):5d}" for n in COUNT_N)
        print(f"{name:8} {growth_rate(code):6.3f} {cells}")


def decoder_rows():
    table = build_table()
    print(f"{table.n_states} states, {table.payload_bytes} bytes")
    for r, u in DECODER_INPUTS:
        row = unpack_row(table.row(r, u))
        frags = " ".join(f"w={w!r}/f={int(f)}" for w, f in zip(row.fragments, row.flags))
        print(f"r={r.name:<13} u={u:08b}  {frags}  -> {row.next_state.name}")


SECTIONS = {"lists": codeword_lists, "lower23": lower23_rows, "counts": cumulative_counts, "decoder": decoder_rows}


def main(argv):
    wanted = argv or list(SECTIONS)
    for name in wanted:
        if name not in SECTIONS:
            raise SystemExit(f"unknown table {name!r}; choose from {', '.join(SECTIONS)}")
        print(f"== {name}")
        SECTIONS[name]()
        print()


if __name__ == "__main__":
    main(sys.argv[1:])
