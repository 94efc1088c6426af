"""Byte blocks <-> big integers <-> decimal digit strings.

A sentinel byte 0x01 is prepended before base-256 (big-endian) evaluation so
that leading zero bytes survive the trip through an integer.

CPython's int/str conversion is quadratic and, from 3.10.7 on, refuses
operands above ``sys.get_int_max_str_digits()`` digits. Large values are split
by powers of ten so the builtin only ever sees short pieces.
"""
from functools import lru_cache

from .errors import CorruptValue, EmptyBlock, MalformedDigits

SENTINEL = b"\x01"

# Piece size handed to the builtin conversions; well under the 4300 default cap.
_LEAF_DIGITS = 1000


@lru_cache(maxsize=64)
def _pow10(exponent):
    return 10**exponent


def bytes_to_bignumber(block):
    """Return the big-endian value of ``0x01 || block``."""
    block = bytes(block)
    if not block:
        raise EmptyBlock("cannot convert an empty block")
    return int.from_bytes(SENTINEL + block, "big")


def bignumber_to_bytes(n, block_len):
    """Inverse of :func:`bytes_to_bignumber` for a block of ``block_len`` bytes."""
    if block_len < 1:
        raise CorruptValue(f"block length must be positive, got {block_len}")
    if n < 1 or n.bit_length() != 8 * block_len + 1:
        raise CorruptValue(
            f"value does not encode a sentinel-prefixed block of {block_len} bytes"
        )
    return (n - (1 << (8 * block_len))).to_bytes(block_len, "big")


def _render(n, level, width):
    # n < 10 ** (2 * leaf(level)); width == 0 means no zero padding.
    if level < 0:
        s = str(n)
        return s.zfill(width) if width else s
    low_digits = _LEAF_DIGITS << level
    if not width and n < _pow10(low_digits):
        return _render(n, level - 1, 0)
    high, low = divmod(n, _pow10(low_digits))
    high_width = max(width - low_digits, 0) if width else 0
    return _render(high, level - 1, high_width) + _render(low, level - 1, low_digits)


def bignumber_to_digits(n):
    """Canonical decimal expansion of a non-negative integer."""
    if n < 0:
        raise ValueError("negative values have no digit string here")
    level = -1
    while n >= _pow10(_LEAF_DIGITS << (level + 1)):
        level += 1
    return _render(n, level, 0)


def _parse(s):
    if len(s) <= _LEAF_DIGITS:
        return int(s)
    low_digits = _LEAF_DIGITS
    while low_digits * 2 < len(s):
        low_digits *= 2
    cut = len(s) - low_digits
    return _parse(s[:cut]) * _pow10(low_digits) + _parse(s[cut:])


def digits_to_bignumber(s):
    """Value of a decimal digit string; leading zeros are accepted."""
    if not isinstance(s, str) or not s or not (s.isascii() and s.isdigit()):
        raise MalformedDigits(f"not a decimal digit string: {s!r:.40}")
    return _parse(s)


def digit_count(n):
    """Number of decimal digits of ``n`` (1 for zero)."""
    if n < _pow10(_LEAF_DIGITS):
        return len(str(n))
    # log10(2) lower bound: the estimate is never above the true count.
    count = int((n.bit_length() - 1) * 0.30102999566) + 1
    while n >= 10**count:
        count += 1
    return count
