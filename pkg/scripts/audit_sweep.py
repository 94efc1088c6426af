#!/usr/bin/env python3
"""Where the bytes go: stored mantissa digits versus chunk digits across chunk sizes.

For each k, compresses random data and prints the container ratio, the mean
mantissa_len/digit_len and the loop-count histogram.

    python scripts/audit_sweep.py --size 65536 --k 4,8,16,64,256
"""
import argparse
import random

from lppie.bench import audit_bytes
from lppie.container import CodecConfig


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--size", type=int, default=64 * 1024)
    parser.add_argument("--k", default="4,8,16,32,64,128,256")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    data = random.Random(args.seed).randbytes(args.size)
    print("| k | container bytes | ratio | mean digit_len | mean mantissa_len | "
          "mantissa/digit | overhead bytes | r histogram |")
    print("|---|---|---|---|---|---|---|---|")
    for k in (int(v) for v in args.k.split(",")):
        a = audit_bytes(data, CodecConfig(chunk_digits=k))
        print(f"| {k} | {a.container_size} | {a.container_size / len(data):.3f} | "
              f"{a.mean_digit_len:.2f} | {a.mean_mantissa_len:.2f} | {a.mean_stored_per_digit:.3f} | "
              f"{a.overhead_bytes} | {a.r_histogram} |")


if __name__ == "__main__":
    main()
