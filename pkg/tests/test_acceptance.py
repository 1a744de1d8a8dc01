"""Acceptance criteria, one PASS/FAIL line each.

Run alone (``pytest tests/test_acceptance.py``) the property criterion runs
the suite in-process; in a full run it reads the outcomes recorded by
conftest, since this file is ordered last.
"""

import time
from pathlib import Path

import conftest
from wavekit.depth import (
    build_unknotting_graph, cross_links_never_shorten, depth, graph_depth,
    sibling_lemma_holds,
)
from wavekit.fatgraph import embed_words
from wavekit.recognition import embeds_in_family, homology_of_filling, recognize_closed
from wavekit.reduction import apply_trace, invert_trace, is_primitive_or_proper_power
from wavekit.waves import distinguished_meridian_pair, pair_key, vertical_slope_pair

M011 = {
    "AAABAbbbAB": ("Abb", "AAAAB"),
    "AABBAABaBaB": ("ABaB", "AABBB"),
}
M011_HOMOLOGY = {"AAABAbbbAB": ("Abb", "Z/9"), "AABBAABaBaB": ("ABaB", "Z/4")}
V2293 = ("AABABAABaBAABaBBaBAABaB", ("BBaBAABaB", "ABABAABaBAAB"))
S768 = [
    ("AAAAABBAABBAAbbbAABBAABB", ("aabbaaB", "aabbaabbaaaaa")),
    ("AAABBAAbAABBAAABBAAbAAbAABB", ("aabbaaa", "baaBaabbaaabbaaBaa")),
    ("AAAAABBBAABAABBBAAAAABBBAABBB", ("bbaaa", "aabbbaabaabbbaaaaabbbaab")),
    ("AABAABaBAABaBBaBAABaBBaBAABaB", ("baabAbaaba", "bAbaabAbbAbaabAbb")),
]
POS_HORIZONTAL = "AAAAAAABBAAAABB"  # A^7 B^2 A^4 B^2
POS_VERTICAL = "AAAAAAABAAABAAAAAAABB"  # A^7 B A^3 B A^7 B^2
FIXTURES = [line.strip() for line in (Path(__file__).parent / "data" / "fixtures.txt").read_text().splitlines()
            if line.strip() and not line.startswith("#")]


def report(n, ok, detail):
    print(f"\n{'PASS' if ok else 'FAIL'} [{n}] {detail}")
    assert ok, detail


def guarded(n, title, fn):
    try:
        ok, detail = fn()
    except Exception as e:  # a crash is a failed criterion, not an error
        ok, detail = False, f"{type(e).__name__}: {e}"
    report(n, ok, f"{title}: {detail}")


def input_pair(mp):
    back = invert_trace(mp.trace)
    return tuple(apply_trace(m, back) for m in mp.words)


def timed_pair(w):
    t = time.perf_counter()
    mp = distinguished_meridian_pair(w)
    return mp, time.perf_counter() - t


def test_criterion_1_m011_pairs():
    def run():
        parts, ok = [], True
        for w, want in M011.items():
            mp, dt = timed_pair(w)
            got = pair_key(input_pair(mp))
            good = got == pair_key(want) and dt < 1.0
            ok &= good
            parts.append(f"{w} -> {' '.join(got)} ({dt * 1000:.0f} ms)")
        return ok, "; ".join(parts)
    guarded(1, "m011 meridian pairs", run)


def test_criterion_2_m011_homology():
    def run():
        parts, ok = [], True
        for w, (m, want) in M011_HOMOLOGY.items():
            mp = distinguished_meridian_pair(w)
            assert pair_key([m])[0] in pair_key(input_pair(mp))
            h = str(homology_of_filling(w, m))
            ok &= h == want
            parts.append(f"H1(H[{w}, {m}]) = {h}")
        return ok, "; ".join(parts)
    guarded(2, "m011 filling homology", run)


def test_criterion_3_v2293():
    def run():
        w, want = V2293
        got = pair_key(input_pair(distinguished_meridian_pair(w)))
        return got == pair_key(want), f"{' '.join(got)}"
    guarded(3, "v2293 meridian pair", run)


def test_criterion_4_s768():
    def run():
        t = time.perf_counter()
        homs, ok, parts = [], True, []
        for i, (w, want) in enumerate(S768, 1):
            mp = distinguished_meridian_pair(w)
            got = pair_key(input_pair(mp))
            ok &= got == pair_key(want)
            h = homology_of_filling(w, input_pair(mp)[0])
            homs.append(h)
            parts.append(f"R{i} {'match' if got == pair_key(want) else 'MISMATCH ' + ' '.join(got)} H1 {h}")
        dt = time.perf_counter() - t
        ok &= homs[0] == homs[1] == homs[2] and dt < 5.0
        return ok, "; ".join(parts) + f"; {dt:.2f} s"
    guarded(4, "s768 meridian pairs", run)


def test_criterion_5_positive_examples():
    def run():
        h = distinguished_meridian_pair(POS_HORIZONTAL)
        hp = input_pair(h)
        has = pair_key(["AAAB"])[0] in pair_key(hp)
        hh = homology_of_filling(POS_HORIZONTAL, "AAAB")
        v1 = homology_of_filling(POS_HORIZONTAL, input_pair(vertical_slope_pair(POS_HORIZONTAL))[0])
        v2 = homology_of_filling(POS_VERTICAL, input_pair(vertical_slope_pair(POS_VERTICAL))[0])
        ok = has and hh.is_trivial() and v1.order == 22 and v2.order == 23
        return ok, (f"A7B2A4B2 pair {' '.join(pair_key(hp))}, H1 horizontal {hh}, "
                    f"|H1| vertical {v1.order}; A7BA3BA7B2 |H1| vertical {v2.order}")
    guarded(5, "positive-curve fillings", run)


def test_criterion_6_wave_arithmetic():
    def run():
        parts, ok = [], True
        for S in (4, 5, 7):
            R = "A" + "B" * S + "A" + "B" * (S + 3)
            got = tuple(homology_of_filling(R, m).order for m in ("A", "BBB", "BBBA"))
            want = (2 * S + 3, 6, 2 * S - 3)
            ok &= got == want
            parts.append(f"S={S} {got}")
        return ok, "; ".join(parts)
    guarded(6, "filling orders 2S+3, 6, 2S-3", run)


def test_criterion_7_property_suite():
    from test_properties import SUITE

    def run():
        results = dict(conftest.SUITE_RESULTS)
        parts, ok, total = [], True, 0.0
        for title, fn in SUITE.items():
            if fn.__name__ in results:
                good, dt = results[fn.__name__]
            else:
                t = time.perf_counter()
                try:
                    fn()
                    good = True
                except Exception:
                    good = False
                dt = time.perf_counter() - t
            ok &= good
            total += dt
            parts.append(f"{title} {'ok' if good else 'FAILED'}")
        return ok and total < 60, "; ".join(parts) + f"; {total:.1f} s"
    guarded(7, "property suite", run)


def test_criterion_8_recognition():
    def run():
        verdicts = [
            str(recognize_closed(embed_words(["A", "B"], "pair"))),
            str(recognize_closed(embed_words(["AABBB", "AB"], "pair"))),
            recognize_closed(embed_words(["A", "BB"], "pair")).verdict,
            embeds_in_family("AAABAbbbAB").verdict,
        ]
        want = ["S3", "S3", "NotInFamily", "DoesNotEmbed"]
        return verdicts == want, ", ".join(verdicts)
    guarded(8, "recognition verdicts", run)


def test_criterion_9_depth():
    def run():
        want = {"AB": 0, "AABBB": 1, POS_HORIZONTAL: 1}
        got = {w: depth(w).depth for w in want}
        ok = got == want
        family, outside = [], 0
        for w in FIXTURES:
            if not is_primitive_or_proper_power(w).terminal and \
                    embeds_in_family(w).verdict == "DoesNotEmbed":
                outside += 1  # depth is only defined inside the family
                continue
            g = build_unknotting_graph(w)
            d = depth(w).depth
            ok &= graph_depth(g) == d and cross_links_never_shorten(g) and sibling_lemma_holds(g)
            family.append(d)
        return ok, (f"depths {list(got.values())}; graph = procedure on {len(family)} fixtures "
                    f"with depths {sorted(family)}; {outside} fixtures outside the family")
    guarded(9, "depth and unknotting graph", run)
