"""Lossless codec built on iterated base-10 logarithms of decimal chunks."""
from .container import (
    CodecConfig,
    Container,
    ContainerHeader,
    IntegrityReport,
    compress_stream,
    decompress_stream,
    parse,
    verify_integrity,
)
from .errors import (
    AmbiguousInverse,
    ChunkOverflow,
    CorruptContainer,
    CorruptValue,
    DecodeError,
    EmptyBlock,
    IntegrityFailure,
    InvalidChunkSize,
    IoFailure,
    LppieError,
    MalformedDigits,
    PrecisionExhausted,
    UnsupportedFormat,
)
from .iterlog import IterLogRecord, PrecisionPolicy, classify_r, iterlog_forward, iterlog_invert
from .partition import ChunkPlan, partition, reassemble
from .radix import bignumber_to_bytes, bignumber_to_digits, bytes_to_bignumber, digits_to_bignumber

__version__ = "0.1.0"

__all__ = [
    "AmbiguousInverse", "ChunkOverflow", "ChunkPlan", "CodecConfig", "Container",
    "ContainerHeader", "CorruptContainer", "CorruptValue", "DecodeError", "EmptyBlock",
    "IntegrityFailure", "IntegrityReport", "InvalidChunkSize", "IoFailure", "IterLogRecord",
    "LppieError", "MalformedDigits", "PrecisionExhausted", "PrecisionPolicy", "UnsupportedFormat",
    "bignumber_to_bytes", "bignumber_to_digits", "bytes_to_bignumber", "classify_r",
    "compress_stream", "decompress_stream", "digits_to_bignumber", "iterlog_forward",
    "iterlog_invert", "parse", "partition", "reassemble", "verify_integrity",
]
