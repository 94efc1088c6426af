"""Corruption injection: every malformed container yields a typed error, never wrong bytes."""
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lppie.container import HEADER_SIZE, CodecConfig, compress_stream, decompress_stream, parse
from lppie.errors import LppieError

SAMPLE = bytes(random.Random(0).randbytes(300))
BLOB = compress_stream(SAMPLE, CodecConfig(block_size=128, chunk_digits=24))


def decode_outcome(blob):
    try:
        return decompress_stream(blob)
    except LppieError as exc:
        return exc


@given(st.binary(max_size=400))
def test_parse_is_total_on_noise(blob):
    try:
        parse(blob)
    except LppieError:
        pass


@given(st.binary(max_size=200))
def test_noise_after_valid_header(tail):
    blob = BLOB[:HEADER_SIZE] + tail
    outcome = decode_outcome(blob)
    assert isinstance(outcome, LppieError) or outcome == SAMPLE


def test_every_truncation_fails_typed():
    for cut in range(len(BLOB)):
        outcome = decode_outcome(BLOB[:cut])
        assert isinstance(outcome, LppieError), cut


@given(st.data())
def test_random_byte_mutations(data):
    blob = bytearray(BLOB)
    for _ in range(data.draw(st.integers(1, 4))):
        pos = data.draw(st.integers(0, len(blob) - 1))
        blob[pos] = data.draw(st.integers(0, 255))
    outcome = decode_outcome(bytes(blob))
    assert isinstance(outcome, LppieError) or outcome == SAMPLE


@pytest.mark.parametrize("field_offset", range(4, HEADER_SIZE))
def test_header_bit_flips(field_offset):
    for bit in range(8):
        blob = bytearray(BLOB)
        blob[field_offset] ^= 1 << bit
        outcome = decode_outcome(bytes(blob))
        assert isinstance(outcome, LppieError), (field_offset, bit)
