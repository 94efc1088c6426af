"""Command-line entry point: ``lppie {compress,decompress,verify,bench,audit,gen-corpus}``."""
import argparse
import hashlib
import sys
import time
from pathlib import Path

from . import bench, corpus
from .container import CodecConfig, compress_stream, decompress_stream, default_jobs, verify_integrity
from .errors import DecodeError, IoFailure, LppieError, PrecisionExhausted, UsageError
from .iterlog import PrecisionPolicy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTEGRITY = 2
EXIT_PRECISION = 3
EXIT_IO = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _codec_flags(p):
    p.add_argument("--chunk-digits", type=_positive, default=64, help="digits per chunk (k)")
    p.add_argument("--block-size", type=_positive, default=4096, help="bytes per block")
    p.add_argument("--single-block", action="store_true",
                   help="convert the whole input as one integer (slow on large inputs)")
    p.add_argument("--guard", type=_positive, default=8, help="initial guard digits")
    _jobs_flag(p)


def _jobs_flag(p):
    p.add_argument("--jobs", type=_positive, default=None,
                   help="worker processes (default: $LPPIE_JOBS or 1)")


def build_parser():
    parser = _Parser(prog="lppie", description="Iterated-logarithm lossless codec.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compress", help="compress a file into an LPPI container")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    _codec_flags(p)

    p = sub.add_parser("decompress", help="restore a file from an LPPI container")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", required=True)
    _jobs_flag(p)

    p = sub.add_parser("verify", help="compare a file's SHA-256 with a container's stored hash")
    p.add_argument("-i", "--input", required=True, help="original file")
    p.add_argument("-c", "--container", required=True)

    p = sub.add_parser("bench", help="size/time table against external compressors")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    p.add_argument("--methods", default=",".join(bench.TABLE_METHODS),
                   help=f"comma-separated subset of {','.join(bench.METHODS)}; empty for LPPIE only")
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    _codec_flags(p)

    p = sub.add_parser("audit", help="per-chunk storage cost of a compressed file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    _codec_flags(p)

    p = sub.add_parser("gen-corpus", help="write a synthetic corpus for testing")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--count", type=_positive, default=200)
    p.add_argument("--max-size", type=int, default=1 << 20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kinds", default=",".join(corpus.KINDS))
    return parser


def _config(args):
    jobs = args.jobs if args.jobs is not None else default_jobs()
    return CodecConfig(
        block_size=args.block_size,
        chunk_digits=args.chunk_digits,
        policy=PrecisionPolicy(initial_guard=args.guard),
        single_block=args.single_block,
        jobs=jobs,
    )


def _read(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path, data):
    try:
        if isinstance(data, bytes):
            Path(path).write_bytes(data)
        else:
            Path(path).write_text(data)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc.strerror or exc}") from None


def _check_output_dir(path):
    parent = Path(path).resolve().parent
    if not parent.is_dir():
        raise IoFailure(f"output directory {parent} does not exist")


def _cmd_compress(args):
    config = _config(args)
    _check_output_dir(args.output)
    data = _read(args.input)
    start = time.perf_counter()
    blob = compress_stream(data, config)
    elapsed = time.perf_counter() - start
    _write(args.output, blob)
    ratio = len(blob) / len(data) if data else float("nan")
    print(f"input   {len(data)} bytes")
    print(f"output  {len(blob)} bytes (ratio {ratio:.3f})")
    print(f"elapsed {elapsed:.3f} s, {config.jobs} worker(s)")
    print(f"sha256  {hashlib.sha256(data).hexdigest()}")
    return EXIT_OK


def _cmd_decompress(args):
    jobs = args.jobs if args.jobs is not None else default_jobs()
    _check_output_dir(args.output)
    blob = _read(args.input)
    start = time.perf_counter()
    data = decompress_stream(blob, jobs=jobs)
    elapsed = time.perf_counter() - start
    _write(args.output, data)
    print(f"input   {len(blob)} bytes")
    print(f"output  {len(data)} bytes")
    print(f"elapsed {elapsed:.3f} s")
    print(f"sha256  {hashlib.sha256(data).hexdigest()} MATCH")
    return EXIT_OK


def _cmd_verify(args):
    report = verify_integrity(_read(args.input), _read(args.container))
    print(f"original {report.original_hash}")
    print(f"stored   {report.stored_hash}")
    print("MATCH" if report.match else "MISMATCH")
    return EXIT_OK if report.match else EXIT_INTEGRITY


def _emit(args, text):
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)


def _notice(message):
    print(f"notice: {message}", file=sys.stderr)


def _cmd_bench(args):
    config = _config(args)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in bench.METHODS]
    if unknown:
        raise UsageError(f"unknown method(s) {', '.join(unknown)}; choose from {', '.join(bench.METHODS)}")
    report = bench.run_benchmark(args.input, methods, config, notify=_notice)
    _emit(args, bench.render_report(report, args.format))
    return EXIT_OK


def _cmd_audit(args):
    report = bench.run_audit(args.input, _config(args))
    _emit(args, bench.render_report(report, args.format))
    return EXIT_OK


def _cmd_gen_corpus(args):
    kinds = tuple(k.strip() for k in args.kinds.split(",") if k.strip())
    bad = [k for k in kinds if k not in corpus.KINDS]
    if bad or not kinds:
        raise UsageError(f"unknown corpus kind(s) {', '.join(bad) or '(none given)'}")
    if args.max_size < 0:
        raise UsageError("--max-size must be non-negative")
    try:
        paths = corpus.write_corpus(args.output, args.count, args.max_size, args.seed, kinds)
    except OSError as exc:
        raise IoFailure(f"cannot write corpus to {args.output}: {exc.strerror or exc}") from None
    total = sum(p.stat().st_size for p in paths)
    print(f"wrote {len(paths)} files, {total} bytes, into {args.output}")
    return EXIT_OK


COMMANDS = {
    "compress": _cmd_compress,
    "decompress": _cmd_decompress,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "audit": _cmd_audit,
    "gen-corpus": _cmd_gen_corpus,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"lppie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DecodeError as exc:
        print(f"lppie: integrity failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except PrecisionExhausted as exc:
        print(f"lppie: precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except IoFailure as exc:
        print(f"lppie: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO
    except LppieError as exc:
        print(f"lppie: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
