from pathlib import Path

import pytest
from hypothesis import given

from strategies import pool_words
from wavekit.depth import (
    BothPrimitiveOrPower, NotInFamily, build_unknotting_graph,
    cross_links_never_shorten, depth, graph_depth, min_path_lengths,
    shortest_meridian, sibling_lemma_holds, to_dot,
)
from wavekit.recognition import embeds_in_family
from wavekit.reduction import is_primitive_or_proper_power
from wavekit.waves import distinguished_meridian_pair

FIXTURES = [line.strip() for line in (Path(__file__).parent / "data" / "fixtures.txt").read_text().splitlines()
            if line.strip() and not line.startswith("#")]
DEPTH_TWO = ["AABBAAABBAABBBBB", "AABBAAAAABBAABBB", "AAABBBABBBBABBB"]


def in_family(w):
    if is_primitive_or_proper_power(w).terminal:
        return True
    return embeds_in_family(w).verdict != "DoesNotEmbed"


@pytest.mark.parametrize("w,n", [("AB", 0), ("AABBB", 1), ("AAAAAAABBAAAABB", 1)]
                         + [(w, 2) for w in DEPTH_TWO])
def test_depth_values(w, n):
    assert depth(w).depth == n


def test_depth_path():
    r = depth("AAAAAAABBAAAABB")
    assert r.path[-1] == "AAAB"
    assert is_primitive_or_proper_power(r.path[-1]).terminal
    assert len(r.path) == r.depth + 1 == len(r.pairs) + 1


def test_not_in_family():
    with pytest.raises(NotInFamily):
        depth("AAABAbbbAB")


def test_shortest_meridian():
    with pytest.raises(BothPrimitiveOrPower):
        shortest_meridian(distinguished_meridian_pair("AAABAbbbAB"))
    with pytest.raises(BothPrimitiveOrPower):
        shortest_meridian(distinguished_meridian_pair("AABBB"))
    w = "AABBAAABBAABBBBB"
    mp = distinguished_meridian_pair(w)
    i = shortest_meridian(mp)
    assert not is_primitive_or_proper_power(mp.words[i]).terminal
    assert len(depth(w).path[1]) == len(mp.words[i])


def test_graph_small():
    g = build_unknotting_graph("AB")
    assert list(g.vertices) == ["AB"] and g.edges == []
    g = build_unknotting_graph("AABBB")
    assert sorted(e.dst for e in g.edges) == ["AB", "ABB"]
    L = min_path_lengths(g)
    assert L == {"AABBB": 0, "AB": 1, "ABB": 1}


def test_dot():
    text = to_dot(build_unknotting_graph("AABBAAABBAABBBBB"))
    assert text.startswith("digraph")
    assert "shape=box" in text
    assert "style=solid" in text


@pytest.mark.parametrize("w", [w for w in FIXTURES if in_family(w)])
def test_fixture_graphs(w):
    g = build_unknotting_graph(w)
    assert graph_depth(g) == depth(w).depth
    assert cross_links_never_shorten(g)
    assert sibling_lemma_holds(g)


def test_sibling_lemma_not_vacuous():
    g = build_unknotting_graph("AABBAAABBAABBBBB")
    P = g.path
    assert len(P) >= 3
    assert any(len(g.children(v)) == 2 for v in P[:-1])


@given(pool_words())
def test_graph_structure(w):
    if not in_family(w):
        return
    g = build_unknotting_graph(w, check=False)
    for v, terminal in g.vertices.items():
        assert terminal == is_primitive_or_proper_power(v).terminal
        kids = [e for e in g.edges if e.src == v and e.kind == "distinguished_child"]
        assert len(kids) == (0 if terminal else 2)
        for e in kids:
            assert len(e.dst) < len(v)
    assert graph_depth(g) == depth(w, check=False).depth
    assert cross_links_never_shorten(g)
