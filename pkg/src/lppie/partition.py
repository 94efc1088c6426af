"""Fixed-width splitting of digit strings into chunks."""
from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import ChunkOverflow, InvalidChunkSize
from .radix import bignumber_to_digits


@dataclass(frozen=True)
class Chunk:
    text: str
    digit_len: int


@dataclass(frozen=True)
class ChunkPlan:
    chunks: Tuple[Chunk, ...]
    chunk_digits: int

    def __len__(self):
        return len(self.chunks)

    def __iter__(self):
        return iter(self.chunks)

    @property
    def total_digits(self):
        return sum(c.digit_len for c in self.chunks)


def partition(s, k):
    """Greedy left-to-right split of ``s`` into pieces of ``k`` digits (last one ragged)."""
    if k < 1:
        raise InvalidChunkSize(f"chunk size must be at least 1, got {k}")
    if not s:
        raise ValueError("cannot partition an empty digit string")
    chunks = tuple(Chunk(s[i:i + k], len(s[i:i + k])) for i in range(0, len(s), k))
    return ChunkPlan(chunks, k)


def render_chunk(value, digit_len):
    """Left-pad ``value`` with zeros to exactly ``digit_len`` digits."""
    text = bignumber_to_digits(value)
    if len(text) > digit_len:
        raise ChunkOverflow(f"value has {len(text)} digits, record allows {digit_len}")
    return text.zfill(digit_len)


def reassemble(plan: Union[ChunkPlan, List[Tuple[Union[str, int], int]]]):
    """Concatenate chunks back into one digit string.

    Entries may be :class:`Chunk` objects or ``(text_or_value, digit_len)`` pairs;
    integer values are zero-padded to their recorded length.
    """
    parts = []
    for entry in plan:
        if isinstance(entry, Chunk):
            entry = (entry.text, entry.digit_len)
        value, digit_len = entry
        if isinstance(value, int):
            parts.append(render_chunk(value, digit_len))
        else:
            if len(value) > digit_len:
                raise ChunkOverflow(f"chunk {value[:16]!r} longer than {digit_len} digits")
            parts.append(value.zfill(digit_len))
    return "".join(parts)
