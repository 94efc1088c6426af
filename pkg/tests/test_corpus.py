import random

import pytest

from lppie.corpus import KINDS, corpus_sizes, generate, markov_text, write_corpus


@pytest.mark.parametrize("kind", KINDS)
def test_kinds_have_requested_length(kind):
    rng = random.Random(0)
    for n in (0, 1, 17, 1000):
        assert len(generate(kind, n, rng)) == n


def test_text_is_printable_ascii():
    text = markov_text(5000, random.Random(2))
    assert text.isascii()
    assert b" the " in text


def test_unknown_kind():
    with pytest.raises(ValueError):
        generate("gif", 10, random.Random(0))


def test_sizes_cover_extremes():
    sizes = corpus_sizes(200, 1 << 20, random.Random(0))
    assert len(sizes) == 200
    assert {0, 1, 1 << 20} <= set(sizes)
    assert all(0 <= s <= 1 << 20 for s in sizes)


def test_corpus_is_reproducible(tmp_path):
    a = write_corpus(tmp_path / "a", count=12, max_size=4000, seed=9)
    b = write_corpus(tmp_path / "b", count=12, max_size=4000, seed=9)
    assert [p.read_bytes() for p in a] == [p.read_bytes() for p in b]
    assert [p.name for p in a] == [p.name for p in b]
