from math import gcd

import pytest
from hypothesis import given, strategies as st

from oracles import exponent_sums
from strategies import POOL, pool_words, reduced_words
from wavekit.fatgraph import embed_single_word
from wavekit.reduction import (
    ALL_MOVES, BANDSUM_MOVES, Band, BasisMove, UnknownBand, apply_move,
    apply_str, apply_trace, classify_bandsum, cmz_is_primitive, format_trace,
    invert_trace, is_positive_curve, is_primitive_or_proper_power,
    minimal_orbit, nonpositivity_screen, parse_trace, positive_member,
    whitehead_minimize,
)
from wavekit.word_core import FULL, canonical, cyclic_reduce, is_rotation

SWAP = BasisMove("swap_generators")


# -- moves ------------------------------------------------------------------

def test_substitution_example():
    m = BasisMove("replace_A_by_bandsum", -1)
    assert str(m) == "A->Ab"
    assert apply_move("AABBB", m).text == "AbABB"


def test_swap_is_involution():
    assert apply_move(apply_move("AAbAB", SWAP), SWAP).text == "AAbAB"


def test_b_move_fixes_a_power():
    for s in (1, -1):
        assert apply_move("A", BasisMove("replace_B_by_bandsum", s)).text == "A"


def test_trace_text_round_trip():
    assert parse_trace(format_trace(ALL_MOVES)) == list(ALL_MOVES)
    with pytest.raises(ValueError):
        parse_trace("A->Q")


@given(reduced_words(max_size=12), st.sampled_from(ALL_MOVES))
def test_move_inverse_and_matrix(w, m):
    v = apply_str(w, m)
    assert is_rotation(cyclic_reduce(apply_str(v, m.inverse())), w)
    (p, q), (r, s) = m.matrix()
    assert abs(p * s - q * r) == 1
    a, b = exponent_sums(w)
    assert exponent_sums(v) == (p * a + q * b, r * a + s * b)


# -- minimisation -----------------------------------------------------------

def test_minimize_examples():
    assert len(whitehead_minimize("ABBBBABBBBBBB")[0].text) == 5
    assert canonical(whitehead_minimize("ABBBBABBBBBBB")[0].text, FULL) == canonical("AABBB", FULL)
    assert len(whitehead_minimize("AABAB")[0].text) == 1
    m, trace = whitehead_minimize("AABBB")
    assert m.text == "AABBB" and trace == []


@given(reduced_words(max_size=12))
def test_minimize_monotone(w):
    m, trace = whitehead_minimize(w)
    cur = cyclic_reduce(w)
    for mv in trace:
        nxt = cyclic_reduce(apply_str(cur, mv))
        assert len(nxt) < len(cur)
        cur = nxt
    assert is_rotation(cur, m.text)
    assert all(len(cyclic_reduce(apply_str(m.text, mv))) >= len(m.text) for mv in BANDSUM_MOVES)


@given(reduced_words(max_size=12), st.sampled_from(ALL_MOVES))
def test_minimum_is_basis_invariant(w, mv):
    v = cyclic_reduce(apply_str(w, mv))
    assert len(whitehead_minimize(v)[0].text) == len(whitehead_minimize(w)[0].text)


def test_minimal_orbit_examples():
    assert [c.text for c in minimal_orbit("A")] == ["A"]
    orbit = {c.text for c in minimal_orbit("AABBB")}
    assert canonical("AABBB", FULL) in orbit


@given(reduced_words(max_size=10), st.sampled_from(ALL_MOVES))
def test_minimal_orbit_invariant(w, mv):
    v = cyclic_reduce(apply_str(w, mv))
    assert minimal_orbit(v) == minimal_orbit(w)


# -- primitivity ------------------------------------------------------------

@pytest.mark.parametrize("w,want", [("A", True), ("AABAB", True), ("AABB", False), ("AB", True),
                                    ("ABB", True), ("AABBB", False), ("ABAB", False)])
def test_cmz_examples(w, want):
    assert cmz_is_primitive(w) is want


def test_primitive_or_power_examples():
    c = is_primitive_or_proper_power("ABAB")
    assert (c.kind, c.root, c.exponent) == ("proper_power", "AB", 2)
    assert is_primitive_or_proper_power("Abb").kind == "primitive"
    assert is_primitive_or_proper_power("AABBB").kind == "neither"
    assert is_primitive_or_proper_power("AAAA").exponent == 4


@given(reduced_words(max_size=12))
def test_primitive_vector(w):
    if cmz_is_primitive(w):
        a, b = exponent_sums(w)
        assert gcd(a, b) == 1


# -- band sums --------------------------------------------------------------

def test_bandsum_edge_parallel():
    d = embed_single_word("AAAABBB")
    c = classify_bandsum(d, "A+B-")
    assert c.case == "edge_parallel"
    assert c.params == (3, 2, 1)
    assert c.deltas == (2, 1)


def test_bandsum_zero_delta():
    c = classify_bandsum(embed_single_word("AAAAAAABBAAAABB"), "A+B-")
    assert c.params[1] == c.params[2]
    assert c.deltas[1] == 0


def test_bandsum_crossing_is_positive():
    c = classify_bandsum(embed_single_word("AAAABBB"), Band("A+", "B-", crossings=2))
    assert c.case == "crosses_edges"
    assert min(c.deltas) > 0
    c = classify_bandsum(embed_single_word("AAAABBB"), Band("A+", "B-"))
    assert c.case == "face_nonparallel" and min(c.deltas) > 0


def test_unknown_band():
    with pytest.raises(UnknownBand):
        classify_bandsum(embed_single_word("AAAABBB"), "A+B+")


@given(pool_words())
def test_bandsum_deltas_are_exact(w):
    d = embed_single_word(w)
    for name in ("A+B-", "A-B+", "A+B+", "A-B-"):
        try:
            c = classify_bandsum(d, name)
        except UnknownBand:
            continue
        for mv, delta in zip(c.moves, c.deltas):
            assert len(cyclic_reduce(apply_str(w, mv))) - len(w) == delta


# -- positivity -------------------------------------------------------------

@pytest.mark.parametrize("w", ["AAAAAAABBAAAABB", "AABBB", "AAAAAAABAAABAAAAAAABB"])
def test_positive_examples(w):
    assert is_positive_curve(w)


def test_positive_through_own_diagram():
    # minimal diagrams are nonpositive, the word's own diagram is positive
    assert positive_member("AAABBBABBBBABBB") is None
    assert is_positive_curve("AAABBBABBBBABBB")


def test_nonpositive_by_screen():
    w = "AABBAAbbaabb"
    assert nonpositivity_screen(w)
    assert positive_member(w) is None
    assert not is_positive_curve(w)


def test_nonpositive_by_orbit():
    # B edges run one way only, so the screen is silent
    w = "AAABAbbbAB"
    assert not nonpositivity_screen(w)
    assert not is_positive_curve(w)


def test_screen_agrees_with_orbit():
    hits = [w for w, _ in POOL if nonpositivity_screen(w)]
    assert hits
    assert all(positive_member(w) is None for w in hits)


def test_trace_replays_to_minimum():
    w = "AAAAAAABAAABAAAAAAABB"
    m, trace = whitehead_minimize(w)
    assert is_rotation(cyclic_reduce(apply_trace(w, trace)), m.text)
    assert is_rotation(cyclic_reduce(apply_trace(m.text, invert_trace(trace))), w)
