import subprocess
import sys

import pytest

from lppie import iterlog
from lppie.cli import main


@pytest.fixture
def sample(tmp_path):
    path = tmp_path / "f.bin"
    path.write_bytes(bytes(range(256)) * 5 + b"tail")
    return path


def test_round_trip(sample, tmp_path, capsys):
    packed, restored = tmp_path / "f.lppi", tmp_path / "g.bin"
    assert main(["compress", "-i", str(sample), "-o", str(packed)]) == 0
    assert main(["decompress", "-i", str(packed), "-o", str(restored)]) == 0
    assert restored.read_bytes() == sample.read_bytes()
    out = capsys.readouterr().out
    assert "ratio" in out and "MATCH" in out


def test_compress_is_bit_exact(sample, tmp_path):
    a, b = tmp_path / "a.lppi", tmp_path / "b.lppi"
    main(["compress", "-i", str(sample), "-o", str(a), "--chunk-digits", "30", "--block-size", "500"])
    main(["compress", "-i", str(sample), "-o", str(b), "--chunk-digits", "30", "--block-size", "500",
          "--jobs", "2"])
    assert a.read_bytes() == b.read_bytes()


def test_verify(sample, tmp_path, capsys):
    packed = tmp_path / "f.lppi"
    main(["compress", "-i", str(sample), "-o", str(packed)])
    capsys.readouterr()
    assert main(["verify", "-i", str(sample), "-c", str(packed)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "MATCH"
    assert lines[0].split()[1] == lines[1].split()[1]
    other = tmp_path / "other.bin"
    other.write_bytes(b"different")
    assert main(["verify", "-i", str(other), "-c", str(packed)]) == 2
    assert capsys.readouterr().out.splitlines()[-1] == "MISMATCH"


def test_truncated_container_exit_2(sample, tmp_path, capsys):
    packed = tmp_path / "f.lppi"
    main(["compress", "-i", str(sample), "-o", str(packed)])
    packed.write_bytes(packed.read_bytes()[:-5])
    assert main(["decompress", "-i", str(packed), "-o", str(tmp_path / "x")]) == 2
    err = capsys.readouterr().err
    assert "block 0" in err
    assert not (tmp_path / "x").exists()


def test_usage_errors_exit_1(capsys):
    assert main_exit(["compress", "--bogus"]) == 1
    assert main_exit(["frobnicate"]) == 1
    assert main_exit(["compress", "-i", "a", "-o", "b", "--chunk-digits", "0"]) == 1
    assert "usage" in capsys.readouterr().err


def main_exit(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_io_failure_exit_4(tmp_path):
    assert main(["compress", "-i", str(tmp_path / "missing"), "-o", str(tmp_path / "o")]) == 4
    src = tmp_path / "s"
    src.write_bytes(b"x")
    assert main(["compress", "-i", str(src), "-o", str(tmp_path / "no" / "dir" / "o")]) == 4


def test_precision_exhausted_exit_3(sample, tmp_path, monkeypatch):
    monkeypatch.setattr(iterlog, "_verifies", lambda *args: False)
    assert main(["compress", "-i", str(sample), "-o", str(tmp_path / "o")]) == 3


def test_bench_and_audit(sample, tmp_path, capsys):
    assert main(["bench", "-i", str(sample), "--methods", "", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "method,size_bytes,time_s,ratio"
    assert [line.split(",")[0] for line in out[1:]] == ["Original", "LPPIE"]
    report = tmp_path / "audit.csv"
    assert main(["audit", "-i", str(sample), "--format", "csv", "-o", str(report)]) == 0
    lines = report.read_text().splitlines()
    assert lines[0] == "block,chunk,digit_len,r,mantissa_len"
    assert len(lines) > 1
    assert main(["bench", "-i", str(sample), "--methods", "nope"]) == 1


def test_jobs_from_environment(sample, tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LPPIE_JOBS", "2")
    assert main(["compress", "-i", str(sample), "-o", str(tmp_path / "o")]) == 0
    assert "2 worker(s)" in capsys.readouterr().out
    monkeypatch.setenv("LPPIE_JOBS", "many")
    assert main(["compress", "-i", str(sample), "-o", str(tmp_path / "o")]) == 1


def test_gen_corpus(tmp_path, capsys):
    out = tmp_path / "corpus"
    assert main(["gen-corpus", "-o", str(out), "--count", "10", "--max-size", "5000", "--seed", "3"]) == 0
    files = sorted(out.iterdir())
    assert len(files) == 10
    sizes = sorted(f.stat().st_size for f in files)
    assert sizes[0] == 0 and sizes[-1] == 5000
    assert main(["gen-corpus", "-o", str(out), "--kinds", "bogus"]) == 1


def test_module_entry_point(sample, tmp_path):
    packed = tmp_path / "f.lppi"
    result = subprocess.run([sys.executable, "-m", "lppie", "compress", "-i", str(sample), "-o", str(packed)],
                            capture_output=True, text=True)
    assert result.returncode == 0, result.stderr
    result = subprocess.run([sys.executable, "-m", "lppie", "verify", "-i", str(sample), "-c", str(packed)],
                            capture_output=True, text=True)
    assert result.returncode == 0 and "MATCH" in result.stdout
