"""Average codeword length under an exact Zipf(s) law, for several alphabet sizes.

    python scripts/zipf_compare.py --sizes 10000,5000000 --s 1.0
"""

import argparse

import numpy as np

from mdcode.analysis import avg_codeword_length
from mdcode.codes import parse_code_list


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="10000,100000,1000000,5000000")
    p.add_argument("--s", type=float, default=1.0, help="Zipf exponent")
    p.add_argument("--codes", default="Fib3,D2,D2,3,D2,3,5,D2,4,5")
    args = p.parse_args()

    codes = parse_code_list(args.codes)
    print("N," + ",".join(str(c) for c in codes))
    for n in (int(x) for x in args.sizes.split(",")):
        weights = np.arange(1, n + 1, dtype=np.float64) ** -args.s
        probs = weights / weights.sum()
        print(f"{n}," + ",".join(f"{avg_codeword_length(c, probs):.5f}" for c in codes))


if __name__ == "__main__":
    main()
