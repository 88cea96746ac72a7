"""``mdcode`` command line.

    mdcode compress --code D2,3,5 IN OUT
    mdcode decompress IN OUT
    mdcode stats --codes Fib3,D2,D2,3,D2,3,5,D2,4,5 [IN]
    mdcode enumerate --code D2 --max-len 8
    mdcode table --out FILE [--csv FILE]

``stats`` with an input file reports per-code compression of that text;
without one it prints codeword density for each code instead.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from . import analysis
from .codes import parse_code, parse_code_list
from .fastdecode import build_table
from .textcodec import ContainerError, compress, decompress, stats

DEFAULT_CODES = "Fib3,D2,D2,3,D2,3,5,D2,4,5"


def _cmd_compress(args) -> int:
    container = compress(Path(args.input).read_bytes(), parse_code(args.code))
    Path(args.output).write_bytes(container.to_bytes())
    print(
        f"{container.n_tokens} tokens, {len(container.vocabulary)} distinct, "
        f"{container.avg_codeword_length:.4f} bits/token",
        file=sys.stderr,
    )
    return 0


def _cmd_decompress(args) -> int:
    try:
        text = decompress(Path(args.input).read_bytes())
    except ContainerError as exc:
        print(f"mdcode: {args.input}: {exc}", file=sys.stderr)
        return 1
    Path(args.output).write_bytes(text)
    return 0


def _cmd_stats(args) -> int:
    codes = parse_code_list(args.codes)
    out = csv.writer(sys.stdout, lineterminator="\n")
    if args.input is None:
        out.writerow(["code", "n", "f_n", "s_n", "kraft_partial", "growth_estimate"])
        for code in codes:
            growth = analysis.growth_rate(code)
            prof = analysis.density_profile(code, args.max_len)
            for n in range(1, args.max_len + 1):
                kraft = analysis.kraft_partial_sum(code, n)
                out.writerow([code, n, prof.f[n], prof.s[n], f"{float(kraft):.12f}", f"{growth:.6f}"])
        return 0
    out.writerow(["code", "vocab_size", "tokens", "avg_length", "delta_pct", "entropy"])
    for row in stats(Path(args.input).read_bytes(), codes):
        out.writerow([
            row.code, row.vocab_size, row.n_tokens,
            f"{row.avg_length:.6f}", f"{row.delta_pct:+.3f}", f"{row.entropy:.6f}",
        ])
    return 0


def _cmd_enumerate(args) -> int:
    code = parse_code(args.code)
    for w in code.automaton.enumerate(args.max_len):
        print(w)
    return 0


def _cmd_table(args) -> int:
    table = build_table()
    Path(args.out).write_bytes(table.to_bytes())
    csv_path = Path(args.csv) if args.csv else Path(args.out).with_suffix(".csv")
    csv_path.write_text(table.to_csv())
    print(f"wrote {table.payload_bytes} bytes to {args.out}, rows to {csv_path}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mdcode", description="Multi-delimiter and Fibonacci codes.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compress", help="compress a text file")
    c.add_argument("--code", default="D2,3,5", help="code name, e.g. D2,3,5 or Fib3")
    c.add_argument("input")
    c.add_argument("output")
    c.set_defaults(func=_cmd_compress)

    d = sub.add_parser("decompress", help="restore a compressed file")
    d.add_argument("input")
    d.add_argument("output")
    d.set_defaults(func=_cmd_decompress)

    s = sub.add_parser("stats", help="compression report for a text, or code density without one")
    s.add_argument("--codes", default=DEFAULT_CODES, help="comma list; bare numbers extend the previous D code")
    s.add_argument("--max-len", type=int, default=15, help="longest codeword length in the density report")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=_cmd_stats)

    e = sub.add_parser("enumerate", help="list codewords, shortest first")
    e.add_argument("--code", required=True)
    e.add_argument("--max-len", type=int, required=True)
    e.set_defaults(func=_cmd_enumerate)

    t = sub.add_parser("table", help="write the D2 byte-decoder table")
    t.add_argument("--out", required=True)
    t.add_argument("--csv", help="where to write the readable rows (default: OUT with .csv)")
    t.set_defaults(func=_cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"mdcode: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"mdcode: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
