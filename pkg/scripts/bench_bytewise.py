"""Compare byte-table and bit-serial D2 decoding throughput.

    python scripts/bench_bytewise.py --mb 100
"""

import argparse

from mdcode.benchmark import StreamConfig, compare


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--mb", type=float, default=100.0, help="stream size in megabytes (10^6 bytes)")
    p.add_argument("--max-bits", type=int, default=24, help="largest bit length of the encoded values")
    p.add_argument("--seed", type=int, default=2024)
    args = p.parse_args()

    cfg = StreamConfig(n_bytes=int(args.mb * 1e6), max_bits=args.max_bits, seed=args.seed)
    by_byte, by_bit = compare(cfg)
    for t in (by_byte, by_bit):
        print(f"{t.name:>5}: {t.seconds:7.3f} s  {t.mb_per_s:8.1f} MB/s  {t.n_values} values")
    print(f"ratio: {by_bit.seconds / by_byte.seconds:.2f}x")


if __name__ == "__main__":
    main()
