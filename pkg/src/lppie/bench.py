"""Size/time comparison against external compressors, and a per-chunk cost audit."""
import csv
import io
import shutil
import subprocess
import tempfile
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple

from .container import HEADER_SIZE, COUNT_SIZE, RECORD_SIZE, CodecConfig, encode
from .errors import IoFailure

LPPIE = "LPPIE"


@dataclass(frozen=True)
class ExternalMethod:
    label: str
    executables: Tuple[str, ...]
    # Placeholders: {exe}, {src}, {dst}. stdout_to_dst writes the tool's stdout to dst.
    argv: Tuple[str, ...]
    suffix: str
    stdout_to_dst: bool = False


# Default row order ZIP, XZ, 7z, GZ; bz2 and zstd are opt-in extras.
METHODS: Dict[str, ExternalMethod] = {
    "zip": ExternalMethod("ZIP", ("zip",), ("{exe}", "-q", "{dst}", "{src}"), ".zip"),
    "xz": ExternalMethod("XZ", ("xz",), ("{exe}", "-c", "{src}"), ".xz", True),
    "7z": ExternalMethod("7z", ("7z", "7za", "7zz"), ("{exe}", "a", "-bd", "-bb0", "{dst}", "{src}"), ".7z"),
    "gz": ExternalMethod("GZ", ("gzip",), ("{exe}", "-c", "{src}"), ".gz", True),
    "bz2": ExternalMethod("BZ2", ("bzip2",), ("{exe}", "-c", "{src}"), ".bz2", True),
    "zstd": ExternalMethod("ZSTD", ("zstd",), ("{exe}", "-q", "-c", "{src}"), ".zst", True),
}
TABLE_METHODS = ("zip", "xz", "7z", "gz")


@dataclass(frozen=True)
class BenchRow:
    method: str
    size: int
    seconds: float


@dataclass
class BenchReport:
    input_size: int
    rows: List[BenchRow]
    workers: int = 1
    skipped: List[str] = field(default_factory=list)

    def ratio(self, row):
        return row.size / self.input_size if self.input_size else float("nan")


def find_executable(method):
    for name in method.executables:
        path = shutil.which(name)
        if path:
            return path
    return None


def _read(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc.strerror or exc}") from None


def _run_external(method, exe, src, workdir):
    dst = Path(workdir) / f"out{method.suffix}"
    argv = [a.format(exe=exe, src=str(src), dst=str(dst)) for a in method.argv]
    start = time.perf_counter()
    if method.stdout_to_dst:
        with open(dst, "wb") as out:
            subprocess.run(argv, stdout=out, stderr=subprocess.DEVNULL, check=True)
    else:
        subprocess.run(argv, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL, check=True)
    elapsed = time.perf_counter() - start
    return BenchRow(method.label, dst.stat().st_size, elapsed)


def run_benchmark(path, methods=TABLE_METHODS, config=CodecConfig(), notify=None):
    """Time LPPIE and each available external compressor on the file at ``path``.

    Every method reads the original file. Missing tools are skipped; ``notify``
    (if given) receives a one-line notice for each.
    """
    data = _read(path)
    report = BenchReport(len(data), [], workers=config.jobs)
    for key in methods:
        if key not in METHODS:
            raise ValueError(f"unknown method {key!r}; choose from {', '.join(METHODS)}")
        method = METHODS[key]
        exe = find_executable(method)
        if exe is None:
            notice = f"{method.label}: no executable among {', '.join(method.executables)}; skipped"
            report.skipped.append(notice)
            if notify:
                notify(notice)
            continue
        with tempfile.TemporaryDirectory(prefix="lppie-bench-") as workdir:
            try:
                report.rows.append(_run_external(method, exe, Path(path).resolve(), workdir))
            except (subprocess.CalledProcessError, OSError) as exc:
                notice = f"{method.label}: failed ({exc}); skipped"
                report.skipped.append(notice)
                if notify:
                    notify(notice)
    start = time.perf_counter()
    size = len(encode(data, config).pack())
    report.rows.append(BenchRow(LPPIE, size, time.perf_counter() - start))
    return report


@dataclass(frozen=True)
class ChunkStat:
    block: int
    chunk: int
    digit_len: int
    r: int
    mantissa_len: int


@dataclass
class AuditReport:
    input_size: int
    container_size: int
    block_count: int
    chunks: List[ChunkStat]

    @property
    def mean_digit_len(self):
        return sum(c.digit_len for c in self.chunks) / len(self.chunks) if self.chunks else 0.0

    @property
    def mean_mantissa_len(self):
        return sum(c.mantissa_len for c in self.chunks) / len(self.chunks) if self.chunks else 0.0

    @property
    def mean_stored_per_digit(self):
        """Mean of mantissa_len / digit_len over chunks."""
        if not self.chunks:
            return 0.0
        return sum(c.mantissa_len / c.digit_len for c in self.chunks) / len(self.chunks)

    @property
    def r_histogram(self):
        return dict(sorted(Counter(c.r for c in self.chunks).items()))

    @property
    def mantissa_bytes(self):
        return sum((c.mantissa_len + 1) // 2 for c in self.chunks)

    @property
    def overhead_bytes(self):
        """Header, chunk counts and fixed record fields: everything but BCD payload."""
        return HEADER_SIZE + COUNT_SIZE * self.block_count + RECORD_SIZE * len(self.chunks)


def audit_bytes(data, config=CodecConfig()):
    container = encode(data, config)
    chunks = [ChunkStat(b, c, rec.digit_len, rec.r, rec.mantissa_len)
              for b, records in enumerate(container.blocks)
              for c, rec in enumerate(records)]
    return AuditReport(len(data), len(container.pack()), len(container.blocks), chunks)


def run_audit(path, config=CodecConfig()):
    """Compress the file at ``path`` and record (digit_len, r, mantissa_len) for every chunk."""
    return audit_bytes(_read(path), config)


# -- rendering ---------------------------------------------------------------

def _fmt_ratio(value):
    return f"{value:.3f}"


def _bench_table(report):
    rows = [("Original", str(report.input_size), "-", _fmt_ratio(1.0) if report.input_size else "-")]
    for row in report.rows:
        ratio = _fmt_ratio(report.ratio(row)) if report.input_size else "-"
        rows.append((row.method, str(row.size), f"{row.seconds:.3f}", ratio))
    return ("Method", "Size (bytes)", "Time (s)", "Ratio"), rows


def _audit_summary(report):
    hist = ", ".join(f"r={r}: {n}" for r, n in report.r_histogram.items()) or "none"
    return [
        ("input bytes", str(report.input_size)),
        ("container bytes", str(report.container_size)),
        ("ratio", _fmt_ratio(report.container_size / report.input_size) if report.input_size else "-"),
        ("chunks", str(len(report.chunks))),
        ("mean digit_len", f"{report.mean_digit_len:.3f}"),
        ("mean mantissa_len", f"{report.mean_mantissa_len:.3f}"),
        ("mean mantissa_len/digit_len", f"{report.mean_stored_per_digit:.3f}"),
        ("r histogram", hist),
        ("mantissa bytes", str(report.mantissa_bytes)),
        ("overhead bytes", str(report.overhead_bytes)),
    ]


def _markdown(header, rows):
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_report(report, fmt="markdown"):
    """Render a BenchReport or AuditReport as markdown or CSV text."""
    if fmt not in ("markdown", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(report, BenchReport):
        header, rows = _bench_table(report)
        if fmt == "csv":
            return _csv(("method", "size_bytes", "time_s", "ratio"), rows)
        text = _markdown(header, rows)
        text += f"\nworkers: {report.workers}\n"
        for notice in report.skipped:
            text += f"skipped: {notice}\n"
        return text
    if isinstance(report, AuditReport):
        if fmt == "csv":
            rows = [(str(c.block), str(c.chunk), str(c.digit_len), str(c.r), str(c.mantissa_len))
                    for c in report.chunks]
            return _csv(("block", "chunk", "digit_len", "r", "mantissa_len"), rows)
        return _markdown(("Quantity", "Value"), _audit_summary(report))
    raise TypeError(f"cannot render {type(report).__name__}")
