#!/usr/bin/env python3
"""Size/time table in the Method/Size/Time layout over synthetic corpora.

    python scripts/table1_bench.py --size 262144 --out results/table1.md
"""
import argparse
import random
import sys
import tempfile
from pathlib import Path

from lppie.bench import TABLE_METHODS, render_report, run_benchmark
from lppie.container import CodecConfig
from lppie.corpus import generate


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--size", type=int, default=256 * 1024, help="bytes per corpus file")
    parser.add_argument("--kinds", default="text,random,zeros,pattern")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--methods", default=",".join(TABLE_METHODS + ("bz2",)))
    parser.add_argument("--out", type=Path, help="markdown output (default stdout)")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    methods = [m for m in args.methods.split(",") if m]
    sections = []
    with tempfile.TemporaryDirectory() as tmp:
        for kind in args.kinds.split(","):
            path = Path(tmp) / f"{kind}.bin"
            path.write_bytes(generate(kind, args.size, rng))
            print(f"running {kind} ({args.size} bytes)...", file=sys.stderr)
            report = run_benchmark(path, methods, CodecConfig(jobs=args.jobs),
                                   notify=lambda m: print(f"  {m}", file=sys.stderr))
            sections.append(f"## {kind}, {args.size} bytes\n\n{render_report(report, 'markdown')}")
    text = "\n".join(sections)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text)
    else:
        print(text)


if __name__ == "__main__":
    main()
