"""Write the pool of eligible words used by the property tests.

A word is kept when it is realizable, not primitive or a proper power, and
has a distinguished meridian pair.  One representative per class under
rotation, inversion and generator symmetries.
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from wavekit.fatgraph import DiagramError, derive_graph, embed_single_word
from wavekit.waves import WaveError, distinguished_meridian_pair
from wavekit.word_core import FULL, canonical, is_cyclically_reduced


@dataclass
class PoolConfig:
    max_length: int = 12
    out: Path = Path(__file__).resolve().parents[1] / "tests" / "data" / "eligible_words.txt"


def reduced_words(n):
    inv = {"A": "a", "a": "A", "B": "b", "b": "B"}
    def grow(prefix):
        if len(prefix) == n:
            if is_cyclically_reduced(prefix):
                yield prefix
            return
        for c in "AaBb":
            if not prefix or c != inv[prefix[-1]]:
                yield from grow(prefix + c)
    # the canonical representative under FULL starts with A
    yield from grow("A")


def eligible(w):
    try:
        mp = distinguished_meridian_pair(w)
    except (DiagramError, WaveError):
        return None
    return derive_graph(mp.source).form


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-length", type=int, default=PoolConfig.max_length)
    p.add_argument("--out", type=Path, default=PoolConfig.out)
    a = p.parse_args()
    cfg = PoolConfig(a.max_length, a.out)
    seen = set()
    rows = []
    for n in range(2, cfg.max_length + 1):
        for w in reduced_words(n):
            c = canonical(w, FULL)
            if c in seen:
                continue
            seen.add(c)
            try:
                embed_single_word(c)
            except DiagramError:
                continue
            form = eligible(c)
            if form:
                rows.append((c, form))
        print(n, len(rows), flush=True)
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with open(cfg.out, "w") as fh:
        fh.write("# word form\n")
        for w, f in rows:
            fh.write(f"{w} {f}\n")


if __name__ == "__main__":
    main()
