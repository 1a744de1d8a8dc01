"""Word generators shared by the property tests."""

from pathlib import Path

from hypothesis import strategies as st

from wavekit.fatgraph import NotRealizable, embed_single_word
from wavekit.word_core import cyclic_reduce, inverse, swap_generators

_INV = {"A": "a", "a": "A", "B": "b", "b": "B"}

POOL_FILE = Path(__file__).parent / "data" / "eligible_words.txt"


def _load_pool():
    rows = []
    for line in POOL_FILE.read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        w, form = line.split()
        rows.append((w, form))
    return rows


POOL = _load_pool()


@st.composite
def free_words(draw, min_size=0, max_size=12):
    """Words that are freely reduced but not necessarily cyclically."""
    n = draw(st.integers(min_size, max_size))
    out = ""
    for _ in range(n):
        choices = [c for c in "AaBb" if not out or c != _INV[out[-1]]]
        out += draw(st.sampled_from(choices))
    return out


def reduced_words(min_size=1, max_size=12):
    return free_words(min_size, max_size).map(cyclic_reduce).filter(bool)


def _realizable(w):
    try:
        embed_single_word(w)
    except NotRealizable:
        return False
    return True


def realizable_words(min_size=1, max_size=12):
    return reduced_words(min_size, max_size).filter(_realizable)


@st.composite
def symmetric_image(draw, w):
    """``w`` moved by a random rotation, inversion and generator symmetry."""
    k = draw(st.integers(0, len(w) - 1))
    w = w[k:] + w[:k]
    if draw(st.booleans()):
        w = inverse(w)
    if draw(st.booleans()):
        w = swap_generators(w)
    for g in "AB":
        if draw(st.booleans()):
            w = w.translate(str.maketrans(g + g.lower(), g.lower() + g))
    return w


def pool_words(form=None):
    base = [w for w, f in POOL if form is None or f == form]
    return st.sampled_from(base).flatmap(symmetric_image)
