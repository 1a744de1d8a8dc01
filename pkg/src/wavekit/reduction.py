"""Basis changes of the handlebody acting on cyclic words.

Up to inner automorphisms, the rank-two Whitehead moves that can change
the length of a cyclic word are the four substitutions

    A -> A B^s        B -> B A^s        (s = +1 or -1)

The remaining basis changes (swapping generators, inverting one) keep the
length.

Geometric dictionary
--------------------
Substituting on A leaves the A-count alone and changes the B-count, so it
replaces D_B by a band sum of D_A and D_B, and vice versa.  A band that runs
parallel to the c arcs of a mixed edge gives:

* edge A+B- (pairs AB, ba) or its twin A-B+ (pairs BA, ab) -> A -> AB^-1
  and B -> BA^-1;
* edge A+B+ (pairs Ab, Ba) or its twin A-B- (pairs aB, bA) -> A -> AB
  and B -> BA.

The length changes are nA - 2c for the A-substitution and nB - 2c for the
B-substitution.  Writing a = nA - c and b = nB - c (the A- and B-endpoints
not in the band) these are a - c and b - c.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .fatgraph import (
    EDGE_MM, EDGE_MP, EDGE_PM, EDGE_PP, EmbeddedDiagram, derive_graph,
    edge_name, graph_of_words, pair_counts,
)
from .word_core import (
    FULL, CyclicWord, ROTATION, canonical, cyclic_reduce,
    power_root, text_of,
)

DEFAULT_MAX_ORBIT = 10 ** 6


class ReductionError(Exception):
    pass


class UnknownBand(ReductionError):
    pass


class OrbitTooLarge(ReductionError):
    pass


@dataclass(frozen=True)
class BasisMove:
    kind: str  # replace_A_by_bandsum | replace_B_by_bandsum | swap_generators | invert_generator
    sign: int = 1  # bandsum exponent
    generator: str = ""  # for invert_generator

    def substitution(self) -> Dict[str, str]:
        if self.kind == "replace_A_by_bandsum":
            img = "A" + ("B" if self.sign > 0 else "b")
            return {"A": img, "a": _inv(img), "B": "B", "b": "b"}
        if self.kind == "replace_B_by_bandsum":
            img = "B" + ("A" if self.sign > 0 else "a")
            return {"B": img, "b": _inv(img), "A": "A", "a": "a"}
        if self.kind == "swap_generators":
            return {"A": "B", "a": "b", "B": "A", "b": "a"}
        if self.kind == "invert_generator":
            g = self.generator
            m = {"A": "A", "a": "a", "B": "B", "b": "b"}
            m[g], m[g.lower()] = g.lower(), g
            return m
        raise ValueError(self.kind)

    def inverse(self) -> "BasisMove":
        if self.kind.startswith("replace"):
            return BasisMove(self.kind, -self.sign)
        return self

    def matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Action on exponent sums as column vectors (nA, nB)."""
        s = self.sign
        if self.kind == "replace_A_by_bandsum":
            return ((1, 0), (s, 1))
        if self.kind == "replace_B_by_bandsum":
            return ((1, s), (0, 1))
        if self.kind == "swap_generators":
            return ((0, 1), (1, 0))
        return ((-1, 0), (0, 1)) if self.generator == "A" else ((1, 0), (0, -1))

    def __str__(self):
        if self.kind.startswith("replace"):
            return str_move_map(self.substitution(), self.kind[8])
        if self.kind == "swap_generators":
            return "swap"
        return "invert " + self.generator

    @classmethod
    def parse(cls, text: str) -> "BasisMove":
        t = text.strip()
        table = {str(m): m for m in ALL_MOVES}
        if t not in table:
            raise ValueError(f"unknown move {text!r}")
        return table[t]


def str_move_map(sub, g):
    return f"{g}->{sub[g]}"


def _inv(s):
    return s[::-1].swapcase()


BANDSUM_MOVES = (
    BasisMove("replace_A_by_bandsum", 1),
    BasisMove("replace_A_by_bandsum", -1),
    BasisMove("replace_B_by_bandsum", 1),
    BasisMove("replace_B_by_bandsum", -1),
)
SYMMETRY_MOVES = (
    BasisMove("swap_generators"),
    BasisMove("invert_generator", generator="A"),
    BasisMove("invert_generator", generator="B"),
)
ALL_MOVES = BANDSUM_MOVES + SYMMETRY_MOVES


def apply_str(s: str, m: BasisMove) -> str:
    sub = m.substitution()
    return cyclic_reduce("".join(sub[c] for c in s))


def apply_move(w, m: BasisMove) -> CyclicWord:
    return CyclicWord(apply_str(cyclic_reduce(text_of(w)), m))


def apply_trace(s: str, trace: Sequence[BasisMove]) -> str:
    for m in trace:
        s = apply_str(s, m)
    return s


def invert_trace(trace: Sequence[BasisMove]) -> List[BasisMove]:
    return [m.inverse() for m in reversed(trace)]


def format_trace(trace: Sequence[BasisMove]) -> str:
    return "\n".join(str(m) for m in trace)


def parse_trace(text: str) -> List[BasisMove]:
    return [BasisMove.parse(line) for line in text.splitlines() if line.strip()]


# ---------------------------------------------------------------------------
# band sums

@dataclass(frozen=True)
class Band:
    """A band from an A-side circle to a B-side circle.

    ``crossings`` counts arcs of the diagram crossed by the band core;
    ``edge_parallel`` marks a band running alongside an existing edge.
    """
    a_side: str
    b_side: str
    crossings: int = 0
    edge_parallel: bool = False


@dataclass(frozen=True)
class BandsumClass:
    case: str  # crosses_edges | face_nonparallel | edge_parallel
    deltas: Tuple[int, int]  # (A-substitution, B-substitution) length changes
    moves: Tuple[BasisMove, BasisMove]
    params: Optional[Tuple[int, int, int]] = None  # (a, b, c) for edge-parallel bands


def _band_moves(edge) -> Tuple[BasisMove, BasisMove]:
    s = -1 if edge in (EDGE_PM, EDGE_MP) else 1
    return (BasisMove("replace_A_by_bandsum", s), BasisMove("replace_B_by_bandsum", s))


def classify_bandsum(d: EmbeddedDiagram, band) -> BandsumClass:
    """Predicted length changes for the two disk systems built from ``band``.

    ``band`` is an edge name such as ``"A+B-"`` (a band parallel to that
    edge) or a :class:`Band`.
    """
    nA = sum(w.upper().count("A") for w in d.words)
    nB = sum(w.upper().count("B") for w in d.words)
    cnt = pair_counts(d.words)
    if isinstance(band, str):
        edge = frozenset((band[:2], band[2:]))
        if edge not in (EDGE_PM, EDGE_MP, EDGE_PP, EDGE_MM) or not cnt.get(edge):
            raise UnknownBand(band)
        c = cnt[edge]
        a, b = nA - c, nB - c
        return BandsumClass("edge_parallel", (a - c, b - c), _band_moves(edge), (a, b, c))
    if not isinstance(band, Band):
        raise UnknownBand(repr(band))
    edge = frozenset((band.a_side, band.b_side))
    if edge not in (EDGE_PM, EDGE_MP, EDGE_PP, EDGE_MM):
        raise UnknownBand(edge_name(edge))
    if band.edge_parallel:
        return classify_bandsum(d, edge_name(edge))
    # the new disk meets the curve nA + nB + 2k times and replaces a disk
    # met nA (or nB) times
    k = band.crossings
    case = "crosses_edges" if k else "face_nonparallel"
    return BandsumClass(case, (nA + 2 * k, nB + 2 * k), _band_moves(edge))


# ---------------------------------------------------------------------------
# minimisation

def _descend(words: Tuple[str, ...]):
    trace = []
    while True:
        total = sum(map(len, words))
        best = None
        for m in BANDSUM_MOVES:
            new = tuple(apply_str(s, m) for s in words)
            t = sum(map(len, new))
            if t < total:
                key = (t, tuple(canonical(s, ROTATION) for s in new))
                if best is None or key < best[0]:
                    best = (key, m, new)
        if best is None:
            return words, trace
        words = best[2]
        trace.append(best[1])


def whitehead_minimize(w) -> Tuple[CyclicWord, List[BasisMove]]:
    s = cyclic_reduce(text_of(w))
    (s,), trace = _descend((s,))
    return CyclicWord(s), trace


def minimize_words(words: Sequence) -> Tuple[Tuple[str, ...], List[BasisMove]]:
    """Greedy descent of the total length of several words at once."""
    return _descend(tuple(cyclic_reduce(text_of(w)) for w in words))


def max_orbit() -> int:
    try:
        return int(os.environ.get("WAVEKIT_MAX_ORBIT", DEFAULT_MAX_ORBIT))
    except ValueError:
        return DEFAULT_MAX_ORBIT


def minimal_orbit_traces(w, cap: Optional[int] = None) -> Dict[str, Tuple[str, List[BasisMove]]]:
    """canonical form -> (representative word, trace from w) over the
    minimal orbit, explored breadth-first by length-preserving band sums."""
    cap = cap or max_orbit()
    s0 = cyclic_reduce(text_of(w))
    smin, trace0 = whitehead_minimize(s0)
    smin = smin.text
    seen = {canonical(smin, FULL): (smin, trace0)}
    queue = deque([smin])
    while queue:
        u = queue.popleft()
        tr = seen[canonical(u, FULL)][1]
        for m in BANDSUM_MOVES:
            v = apply_str(u, m)
            if len(v) != len(u):
                continue
            key = canonical(v, FULL)
            if key in seen:
                continue
            seen[key] = (v, tr + [m])
            if len(seen) > cap:
                raise OrbitTooLarge(f"minimal orbit exceeds {cap} words")
            queue.append(v)
    return seen


def minimal_orbit(w, cap: Optional[int] = None) -> List[CyclicWord]:
    keys = minimal_orbit_traces(w, cap)
    return [CyclicWord(k) for k in sorted(keys, key=lambda k: (len(k), k.translate(str.maketrans("AaBb", "0123"))))]


# ---------------------------------------------------------------------------
# primitivity

_FLIP = {"A": str.maketrans("Aa", "aA"), "B": str.maketrans("Bb", "bB")}


def _syllables(s: str, g: str) -> List[int]:
    """Exponents of the cyclic syllables of generator ``g`` in a positive word."""
    start = next(i for i in range(len(s)) if s[i] == g and s[i - 1] != g)
    r = s[start:] + s[:start]
    out, run = [], 0
    for c in r + "#":
        if c == g:
            run += 1
        elif run:
            out.append(run)
            run = 0
    return out


def cmz_is_primitive(w) -> bool:
    s = cyclic_reduce(text_of(w))
    while True:
        if len(s) <= 1:
            return len(s) == 1
        for g in "AB":
            if g in s and g.lower() in s:
                return False
            if g.lower() in s:
                s = s.translate(_FLIP[g])
        if "A" not in s or "B" not in s:
            return False
        ea, eb = _syllables(s, "A"), _syllables(s, "B")
        if set(ea) == {1} and set(eb) <= {min(eb), min(eb) + 1}:
            m, e = "A", min(eb)
        elif set(eb) == {1} and set(ea) <= {min(ea), min(ea) + 1}:
            m, e = "B", min(ea)
        else:
            return False
        if m == "A":
            sub = {"A": "A" + "b" * e, "B": "B"}
        else:
            sub = {"B": "B" + "a" * e, "A": "A"}
        s = cyclic_reduce("".join(sub[c] for c in s))


@dataclass(frozen=True)
class PrimitivityClass:
    kind: str  # primitive | proper_power | neither
    root: Optional[str] = None
    exponent: int = 1
    root_primitive: bool = False

    @property
    def terminal(self) -> bool:
        return self.kind != "neither"


def is_primitive_or_proper_power(w) -> PrimitivityClass:
    s = cyclic_reduce(text_of(w))
    if not s:
        return PrimitivityClass("neither")
    if cmz_is_primitive(s):
        return PrimitivityClass("primitive")
    r = power_root(s)
    if r is not None:
        return PrimitivityClass("proper_power", r[0], r[1], cmz_is_primitive(r[0]))
    return PrimitivityClass("neither")


def is_terminal(w) -> bool:
    return is_primitive_or_proper_power(w).terminal


# ---------------------------------------------------------------------------
# positivity

def is_positive_word(s: str) -> bool:
    """Positive up to generator inversion with a two-connected graph."""
    return graph_of_words([s]).form == "FormII"


def positive_member(w, cap: Optional[int] = None):
    """(word, trace) for a positive member of the minimal orbit, or None."""
    orbit = minimal_orbit_traces(w, cap)
    for key in sorted(orbit, key=lambda k: k.translate(str.maketrans("AaBb", "0123"))):
        v, tr = orbit[key]
        if is_positive_word(v):
            return v, tr
    return None


def nonpositivity_screen(s: str) -> bool:
    """Certificate that the curve of ``s`` is nonpositive.

    Holds when the graph of ``s`` is connected without a cut vertex and not
    positive, and its A+A- edges run in both directions (both AA and aa
    occur) as do its B+B- edges.
    """
    s = cyclic_reduce(text_of(s))
    if graph_of_words([s]).form != "FormI":
        return False
    loop = s + s[:1]
    return all(x + x in loop and x.lower() * 2 in loop for x in "AB")


def is_positive_curve(w, cap: Optional[int] = None) -> bool:
    """Some disk system gives a connected positive graph with no cut vertex.

    Checks the word as given, then the minimal orbit. A curve whose only
    positive diagrams are non-minimal and differ from the input is missed.
    """
    s0 = cyclic_reduce(text_of(w))
    if is_positive_word(s0):
        return True
    if nonpositivity_screen(s0):
        return False
    s, _ = whitehead_minimize(s0)
    if is_positive_word(s.text):
        return True
    if nonpositivity_screen(s.text):
        return False
    return positive_member(w, cap) is not None


def diagram_is_positive(d: EmbeddedDiagram) -> bool:
    return derive_graph(d).form == "FormII"
