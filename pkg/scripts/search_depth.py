"""Search positive words for tunnels of depth two or more.

Words A^a1 B^b1 ... A^ak B^bk with k syllable pairs are enumerated up to
symmetry; each one that embeds in the family gets its depth computed.

    python3 scripts/search_depth.py --min-length 14 --max-length 18
"""

import argparse
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass

from wavekit.depth import DepthError, build_unknotting_graph, cross_links_never_shorten, depth, graph_depth, sibling_lemma_holds
from wavekit.fatgraph import DiagramError
from wavekit.recognition import DOES_NOT_EMBED, embeds_in_family
from wavekit.reduction import is_primitive_or_proper_power
from wavekit.waves import WaveError
from wavekit.word_core import FULL, canonical


@dataclass
class SearchConfig:
    min_length: int = 5
    max_length: int = 16
    syllable_pairs: tuple = (2, 3)
    min_depth: int = 2
    out: str = ""


def positive_words(n, k):
    for comp in itertools.product(range(1, n), repeat=2 * k):
        if sum(comp) == n:
            yield "".join(("A" if i % 2 == 0 else "B") * c for i, c in enumerate(comp))


def run(cfg: SearchConfig):
    seen = set()
    hits = []
    t0 = time.time()
    for n in range(cfg.min_length, cfg.max_length + 1):
        for k in cfg.syllable_pairs:
            for w in positive_words(n, k):
                key = canonical(w, FULL)
                if key in seen:
                    continue
                seen.add(key)
                if is_primitive_or_proper_power(w).terminal:
                    continue
                try:
                    fam = embeds_in_family(w)
                    if fam.verdict == DOES_NOT_EMBED:
                        continue
                    r = depth(w, check=False)
                except (DiagramError, WaveError, DepthError):
                    continue
                if r.depth < cfg.min_depth:
                    continue
                g = build_unknotting_graph(w, check=False)
                row = {
                    "word": w, "family": str(fam), "depth": r.depth, "path": r.path,
                    "graph_depth": graph_depth(g), "cross_links_ok": cross_links_never_shorten(g),
                    "sibling_lemma_ok": sibling_lemma_holds(g), "vertices": len(g.vertices),
                }
                hits.append(row)
                print(json.dumps(row), flush=True)
        print(f"# length {n}: {len(seen)} classes, {len(hits)} hits, {time.time() - t0:.1f}s", file=sys.stderr)
    return hits


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    d = SearchConfig()
    p.add_argument("--min-length", type=int, default=d.min_length)
    p.add_argument("--max-length", type=int, default=d.max_length)
    p.add_argument("--min-depth", type=int, default=d.min_depth)
    p.add_argument("--out", default=d.out, help="write hits as JSON")
    a = p.parse_args()
    cfg = SearchConfig(a.min_length, a.max_length, d.syllable_pairs, a.min_depth, a.out)
    hits = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "hits": hits}, fh, indent=1)


if __name__ == "__main__":
    main()
