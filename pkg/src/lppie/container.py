"""The ``LPPI`` archive: header, per-block chunk records, SHA-256 of the input.

Layout (all integers little-endian)::

    header   magic "LPPI" | version u8 | flags u8 | block_size u32 |
             chunk_digits u32 | original_len u64 | sha256 [32] | block_count u32
    block    chunk_count u32, then chunk_count records
    record   digit_len u32 | r u8 | mantissa_len u32 | BCD mantissa

BCD packs two digits per byte, high nibble first, 0xF pads an odd count.
See FORMAT.md for a worked example.
"""
import hashlib
import math
import os
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Context, Decimal
from typing import List

from .errors import CorruptContainer, IntegrityFailure, InvalidConfig, LppieError, UnsupportedFormat
from .iterlog import DEFAULT_POLICY, IterLogRecord, PrecisionPolicy, iterlog_forward, iterlog_invert
from .partition import partition, reassemble
from .radix import bignumber_to_bytes, bignumber_to_digits, bytes_to_bignumber, digits_to_bignumber

MAGIC = b"LPPI"
VERSION = 1
FLAG_SINGLE_BLOCK = 0x01

HEADER_FORMAT = "<4sBBIIQ32sI"
HEADER_SIZE = struct.calcsize(HEADER_FORMAT)
COUNT_FORMAT = "<I"
COUNT_SIZE = struct.calcsize(COUNT_FORMAT)
RECORD_FORMAT = "<IBI"
RECORD_SIZE = struct.calcsize(RECORD_FORMAT)

_U32_MAX = 2**32 - 1
_LOG10_2 = Context(prec=60).log10(Decimal(2))


@dataclass(frozen=True)
class CodecConfig:
    block_size: int = 4096
    chunk_digits: int = 64
    policy: PrecisionPolicy = DEFAULT_POLICY
    single_block: bool = False
    jobs: int = 1

    def __post_init__(self):
        if not 1 <= self.block_size <= _U32_MAX:
            raise InvalidConfig(f"block size must be in [1, 2**32), got {self.block_size}")
        if not 1 <= self.chunk_digits <= _U32_MAX:
            raise InvalidConfig(f"chunk digits must be in [1, 2**32), got {self.chunk_digits}")
        if self.jobs < 1:
            raise InvalidConfig(f"jobs must be >= 1, got {self.jobs}")


@dataclass(frozen=True)
class ContainerHeader:
    flags: int
    block_size: int
    chunk_digits: int
    original_len: int
    original_sha256: bytes
    block_count: int
    version: int = VERSION

    @property
    def single_block(self):
        return bool(self.flags & FLAG_SINGLE_BLOCK)

    def pack(self):
        return struct.pack(HEADER_FORMAT, MAGIC, self.version, self.flags, self.block_size,
                           self.chunk_digits, self.original_len, self.original_sha256,
                           self.block_count)

    def block_lengths(self):
        return block_lengths(self.original_len, self.block_size, self.single_block)


@dataclass
class Container:
    header: ContainerHeader
    blocks: List[List[IterLogRecord]] = field(default_factory=list)

    def pack(self):
        out = [self.header.pack()]
        for records in self.blocks:
            out.append(struct.pack(COUNT_FORMAT, len(records)))
            out.extend(pack_record(rec) for rec in records)
        return b"".join(out)


@dataclass(frozen=True)
class IntegrityReport:
    match: bool
    original_hash: str
    stored_hash: str


def block_lengths(original_len, block_size, single_block):
    if original_len == 0:
        return []
    if single_block:
        return [original_len]
    full, tail = divmod(original_len, block_size)
    return [block_size] * full + ([tail] if tail else [])


def digit_window(block_len):
    """Inclusive bounds on the digit count of a sentinel-prefixed block's value.

    The value lies in [2**(8L), 2**(8L+1)), so its digit count is
    floor(log10) + 1 evaluated at both ends.
    """
    bits = 8 * block_len
    lo = math.floor(bits * _LOG10_2) + 1
    hi = math.floor((bits + 1) * _LOG10_2) + 1
    return lo, hi


# -- BCD ---------------------------------------------------------------------

def pack_bcd(digits):
    if len(digits) % 2:
        digits += "?"
    table = {str(i): i for i in range(10)}
    table["?"] = 0xF
    return bytes(table[digits[i]] << 4 | table[digits[i + 1]] for i in range(0, len(digits), 2))


def unpack_bcd(data, count):
    if len(data) != (count + 1) // 2:
        raise CorruptContainer(f"BCD field holds {len(data)} bytes for {count} digits")
    nibbles = []
    for byte in data:
        nibbles.append(byte >> 4)
        nibbles.append(byte & 0xF)
    if count % 2:
        if nibbles.pop() != 0xF:
            raise CorruptContainer("odd-length mantissa lacks the 0xF pad nibble")
    if any(n > 9 for n in nibbles):
        raise CorruptContainer("non-decimal nibble in mantissa")
    return "".join(map(str, nibbles))


def pack_record(rec):
    return struct.pack(RECORD_FORMAT, rec.digit_len, rec.r, rec.mantissa_len) + pack_bcd(rec.mantissa)


# -- encode ------------------------------------------------------------------

def _split_blocks(data, config):
    lengths = block_lengths(len(data), config.block_size, config.single_block)
    pos = 0
    for n in lengths:
        yield data[pos:pos + n]
        pos += n


def _forward_task(args):
    value, digit_len, policy = args
    return iterlog_forward(value, digit_len, policy)


def _inverse_task(args):
    b, c, rec = args
    try:
        return iterlog_invert(rec)
    except LppieError as exc:
        raise exc.located(block=b, chunk=c) from None


def _map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(item) for item in items]


def encode(data, config=CodecConfig()):
    """Build the in-memory :class:`Container` for ``data``."""
    data = bytes(data)
    blocks = list(_split_blocks(data, config))
    header = ContainerHeader(
        flags=FLAG_SINGLE_BLOCK if config.single_block else 0,
        block_size=config.block_size,
        chunk_digits=config.chunk_digits,
        original_len=len(data),
        original_sha256=hashlib.sha256(data).digest(),
        block_count=len(blocks),
    )
    tasks, counts = [], []
    for block in blocks:
        plan = partition(bignumber_to_digits(bytes_to_bignumber(block)), config.chunk_digits)
        counts.append(len(plan))
        tasks.extend((digits_to_bignumber(ch.text), ch.digit_len, config.policy) for ch in plan)
    records = _map(_forward_task, tasks, config.jobs)
    grouped, pos = [], 0
    for n in counts:
        grouped.append(records[pos:pos + n])
        pos += n
    return Container(header, grouped)


def compress_stream(data, config=CodecConfig()):
    """Compress ``data`` (bytes-like or a binary file object) into container bytes."""
    if hasattr(data, "read"):
        data = data.read()
    return encode(data, config).pack()


# -- parse -------------------------------------------------------------------

def parse_header(blob):
    blob = bytes(blob)
    if len(blob) < HEADER_SIZE:
        if len(blob) >= 4 and blob[:4] != MAGIC:
            raise UnsupportedFormat("bad magic")
        raise CorruptContainer(f"truncated header: {len(blob)} of {HEADER_SIZE} bytes")
    magic, version, flags, block_size, chunk_digits, original_len, sha, block_count = \
        struct.unpack_from(HEADER_FORMAT, blob)
    if magic != MAGIC:
        raise UnsupportedFormat(f"bad magic {magic!r}")
    if version != VERSION:
        raise UnsupportedFormat(f"unsupported version {version}")
    if flags & ~FLAG_SINGLE_BLOCK:
        raise UnsupportedFormat(f"unknown flag bits 0x{flags:02x}")
    if block_size == 0 or chunk_digits == 0:
        raise CorruptContainer("block size and chunk digits must be non-zero")
    if (original_len == 0) != (block_count == 0):
        raise CorruptContainer("original length and block count disagree on emptiness")
    header = ContainerHeader(flags, block_size, chunk_digits, original_len, sha, block_count)
    expected = 1 if header.single_block and original_len else -(-original_len // block_size)
    if block_count != expected:
        raise CorruptContainer(f"header claims {block_count} blocks, layout implies {expected}")
    return header


def parse(blob):
    """Parse and structurally validate a container without any arithmetic decoding."""
    blob = bytes(blob)
    header = parse_header(blob)
    pos = HEADER_SIZE
    if header.block_count * COUNT_SIZE > len(blob) - pos:
        raise CorruptContainer("truncated before the first block", block=0)
    k = header.chunk_digits
    blocks = []
    for b, block_len in enumerate(header.block_lengths()):
        if len(blob) - pos < COUNT_SIZE:
            raise CorruptContainer("truncated chunk count", block=b)
        (count,) = struct.unpack_from(COUNT_FORMAT, blob, pos)
        pos += COUNT_SIZE
        if count == 0 or count * RECORD_SIZE > len(blob) - pos:
            raise CorruptContainer(f"implausible chunk count {count}", block=b)
        lo, hi = digit_window(block_len)
        if not -(-lo // k) <= count <= -(-hi // k):
            raise CorruptContainer(f"chunk count {count} impossible for {block_len} bytes", block=b)
        records, total = [], 0
        for c in range(count):
            if len(blob) - pos < RECORD_SIZE:
                raise CorruptContainer("truncated record", block=b, chunk=c)
            digit_len, r, mlen = struct.unpack_from(RECORD_FORMAT, blob, pos)
            pos += RECORD_SIZE
            if not 1 <= digit_len <= k or (c < count - 1 and digit_len != k):
                raise CorruptContainer(f"digit length {digit_len} breaks the chunk layout",
                                       block=b, chunk=c)
            nbytes = (mlen + 1) // 2
            if mlen == 0 or nbytes > len(blob) - pos:
                raise CorruptContainer(f"mantissa length {mlen} overruns the container",
                                       block=b, chunk=c)
            try:
                mantissa = unpack_bcd(blob[pos:pos + nbytes], mlen)
                records.append(IterLogRecord(r, mantissa, digit_len))
            except LppieError as exc:
                raise exc.located(block=b, chunk=c) from None
            pos += nbytes
            total += digit_len
        if not lo <= total <= hi:
            raise CorruptContainer(f"{total} digits impossible for {block_len} bytes", block=b)
        blocks.append(records)
    if pos != len(blob):
        raise CorruptContainer(f"{len(blob) - pos} trailing bytes after the last block")
    return Container(header, blocks)


# -- decode ------------------------------------------------------------------

def decode(container, jobs=1):
    header = container.header
    tasks = [(b, c, rec) for b, records in enumerate(container.blocks)
             for c, rec in enumerate(records)]
    values = _map(_inverse_task, tasks, jobs)
    out, pos = [], 0
    for b, (records, block_len) in enumerate(zip(container.blocks, header.block_lengths())):
        pairs = [(values[pos + c], rec.digit_len) for c, rec in enumerate(records)]
        pos += len(records)
        try:
            n = digits_to_bignumber(reassemble(pairs))
            out.append(bignumber_to_bytes(n, block_len))
        except LppieError as exc:
            raise exc.located(block=b) from None
    data = b"".join(out)
    if len(data) != header.original_len:
        raise IntegrityFailure(f"decoded {len(data)} bytes, header says {header.original_len}")
    if hashlib.sha256(data).digest() != header.original_sha256:
        raise IntegrityFailure("SHA-256 of decoded data does not match the stored hash")
    return data


def decompress_stream(blob, jobs=1):
    """Invert :func:`compress_stream`; the stored SHA-256 is always checked."""
    if hasattr(blob, "read"):
        blob = blob.read()
    return decode(parse(blob), jobs=jobs)


def verify_integrity(original, blob):
    """Compare the SHA-256 of ``original`` with the hash stored in ``blob`` (no decoding)."""
    header = parse_header(blob)
    digest = hashlib.sha256(bytes(original)).hexdigest()
    stored = header.original_sha256.hex()
    return IntegrityReport(digest == stored, digest, stored)


def default_jobs():
    """Worker count from ``LPPIE_JOBS``; 1 when unset."""
    raw = os.environ.get("LPPIE_JOBS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        raise InvalidConfig(f"LPPIE_JOBS must be an integer, got {raw!r}") from None
