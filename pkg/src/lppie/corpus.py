"""Synthetic test corpora: random, zero-filled, English-like text, adversarial patterns."""
import random
from collections import defaultdict
from pathlib import Path

KINDS = ("random", "zeros", "ones", "text", "pattern", "sparse", "ramp")

_SEED_TEXT = (
    "the tide came in slowly over the flats and the birds moved ahead of it in "
    "loose groups. a man with a bucket walked along the line of weed, stopping "
    "now and then to turn over a stone. the wind was from the west and carried "
    "the smell of salt and diesel from the harbour. in the town the shops were "
    "opening one after another, shutters rattling up, and somebody was already "
    "arguing about the price of bread. by noon the water had covered the flats "
    "and the birds had gone back to the roofs, where they stood in rows and "
    "watched the boats come round the point one at a time. "
)


def _markov_table(text, order):
    table = defaultdict(list)
    for i in range(len(text) - order):
        table[text[i:i + order]].append(text[i + order])
    return table


_TABLE = _markov_table(_SEED_TEXT, 3)


def markov_text(n, rng):
    """``n`` bytes of order-3 character Markov text trained on a short seed passage."""
    if n <= 0:
        return b""
    state = _SEED_TEXT[:3]
    out = list(state)
    while len(out) < n:
        choices = _TABLE.get(state)
        nxt = rng.choice(choices) if choices else " "
        out.append(nxt)
        state = state[1:] + nxt
    return "".join(out[:n]).encode("ascii")


def generate(kind, n, rng):
    """Return ``n`` bytes of the given corpus ``kind`` drawn from ``rng``."""
    if kind == "random":
        return rng.randbytes(n)
    if kind == "zeros":
        return bytes(n)
    if kind == "ones":
        return b"\xff" * n
    if kind == "text":
        return markov_text(n, rng)
    if kind == "pattern":
        unit = rng.randbytes(rng.randint(1, 16))
        return (unit * (n // len(unit) + 1))[:n]
    if kind == "sparse":
        buf = bytearray(n)
        for _ in range(max(1, n // 64)):
            if n:
                buf[rng.randrange(n)] = rng.randrange(1, 256)
        return bytes(buf)
    if kind == "ramp":
        return bytes(i & 0xFF for i in range(n))
    raise ValueError(f"unknown corpus kind {kind!r}; choose from {', '.join(KINDS)}")


def corpus_sizes(count, max_size, rng):
    """File sizes in [0, max_size]: always 0, 1 and max_size, the rest log-uniform.

    The log-uniform draws stop at max_size / 16 so a 200-file corpus stays a few
    MiB; the codec runs at roughly 20 s per MiB on one core.
    """
    sizes = [0, 1, max_size][:count]
    ceiling = max(1, max_size // 16)
    while len(sizes) < count:
        sizes.append(min(ceiling, int(2 ** rng.uniform(0, ceiling.bit_length()))))
    return sizes


def write_corpus(outdir, count=200, max_size=1 << 20, seed=0, kinds=KINDS):
    """Write ``count`` files into ``outdir``; returns the list of paths."""
    rng = random.Random(seed)
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, size in enumerate(corpus_sizes(count, max_size, rng)):
        kind = kinds[i % len(kinds)]
        path = outdir / f"{i:04d}_{kind}_{size}.bin"
        path.write_bytes(generate(kind, size, rng))
        paths.append(path)
    return paths
