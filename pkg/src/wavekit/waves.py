"""Waves, the distinguished wave and surgery along a wave.

A wave based at curve R is a chord in a face of the diagram joining two
arc sides of R that lie on the same side of R.  For a chord from arc i to
arc j the boundary of a neighbourhood of R and the chord consists of a
copy of R and the two curves read off R between the endpoints:

    m1 = w[i+1 .. j]      m2 = w[j+1 .. i]

so surgery is a cyclic split of the word at the two arcs.  Chords giving
the same unordered pair of curves are counted as one wave.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .fatgraph import (
    EDGE_AA, EDGE_BB, DiagramError, EmbeddedDiagram, all_embeddings, derive_graph,
    embed_single_word, face_orbits, validate,
)
from .reduction import (
    BasisMove, apply_trace, invert_trace, is_primitive_or_proper_power,
    positive_member, whitehead_minimize,
)
from .word_core import (
    UNORIENTED, AbelianImage, canonical, cyclic_reduce, exponent_sums, inverse,
    sort_key, text_of,
)


class WaveError(Exception):
    pass


class DiagramNotEligible(WaveError):
    pass


class BoundaryCompressible(WaveError):
    pass


class NotPositive(WaveError):
    pass


@dataclass(frozen=True)
class Wave:
    base: int
    ends: Tuple[tuple, tuple]  # two darts of the base curve, same end flag
    face: int
    kind: str  # unique_nonpositive | horizontal | vertical | pair | unclassified
    words: Tuple[str, str]  # reduced surgery words (m1, m2) in the diagram's basis
    chords: int = 1  # parallel chords in this class

    @property
    def arcs(self) -> Tuple[int, int]:
        return (self.ends[0][1], self.ends[1][1])

    @property
    def side(self) -> int:
        return self.ends[0][2]

    def key(self) -> Tuple[str, str]:
        return pair_key(self.words)


@dataclass(frozen=True)
class MeridianPair:
    m1: str
    m2: str
    diagram: EmbeddedDiagram = field(compare=False)
    base: str = ""
    wave: Optional[Wave] = field(default=None, compare=False)
    source: Optional[EmbeddedDiagram] = field(default=None, compare=False)
    trace: Tuple[BasisMove, ...] = ()  # moves taking the input word to ``base``
    input_word: str = ""
    oriented: Tuple[str, str] = ()  # m1, m2 oriented as boundary pieces of R

    @property
    def words(self) -> Tuple[str, str]:
        return (self.m1, self.m2)

    def key(self) -> Tuple[str, str]:
        return pair_key(self.words)

    def in_input_basis(self) -> Tuple[str, str]:
        back = invert_trace(self.trace)
        return tuple(canonical(apply_trace(w, back), UNORIENTED) for w in self.words)


def pair_key(words) -> Tuple[str, str]:
    return tuple(sorted((canonical(cyclic_reduce(w), UNORIENTED) for w in words), key=sort_key))


def split_word(w: str, i: int, j: int) -> Tuple[str, str]:
    """Letters strictly after arc i up to arc j, and the rest."""
    n = len(w)
    r = w[i + 1:] + w[:i + 1]
    cut = (j - i) % n
    return r[:cut], r[cut:]


# ---------------------------------------------------------------------------
# wave search

def _chords(d: EmbeddedDiagram, base: int):
    for fi, orb in enumerate(face_orbits(d)):
        mine = [x for x in orb if x[0] == base]
        for a in range(len(mine)):
            for b in range(a + 1, len(mine)):
                x, y = mine[a], mine[b]
                if x[2] == y[2] and x[1] != y[1]:
                    yield fi, x, y


def _classify(d: EmbeddedDiagram, base: int, reps) -> str:
    if d.ncurves != 1:
        return "pair"
    form = derive_graph(d).form
    if form == "FormI":
        return "unique_nonpositive"
    if form != "FormII":
        return "unclassified"
    kinds = set()
    for _, x, y in reps:
        ex, ey = d.arc_edge((base, x[1])), d.arc_edge((base, y[1]))
        if {ex, ey} == {EDGE_AA, EDGE_BB}:
            kinds.add("horizontal")
        elif ex not in (EDGE_AA, EDGE_BB) and ey not in (EDGE_AA, EDGE_BB):
            kinds.add("vertical")
        else:
            kinds.add("unclassified")
    return kinds.pop() if len(kinds) == 1 else "unclassified"


def find_waves(d: EmbeddedDiagram, base: int = 0) -> List[Wave]:
    """One wave per class of chords based at ``base`` in faces of ``d``."""
    w = d.words[base]
    classes: Dict[tuple, list] = {}
    for fi, x, y in _chords(d, base):
        m1, m2 = split_word(w, x[1], y[1])
        m1, m2 = cyclic_reduce(m1), cyclic_reduce(m2)
        if not m1 or not m2:
            continue
        classes.setdefault(pair_key((m1, m2)), []).append((fi, x, y, m1, m2))
    out = []
    for key, members in classes.items():
        members.sort(key=lambda t: (t[1][1], t[2][1], t[1][2]))
        fi, x, y, m1, m2 = members[0]
        kind = _classify(d, base, [(f, a, b) for f, a, b, _, _ in members])
        out.append(Wave(base, (x, y), fi, kind, (m1, m2), len(members)))
    order = {"horizontal": 0, "vertical": 1}
    out.sort(key=lambda v: (order.get(v.kind, 2), [sort_key(s) for s in v.key()]))
    return out


def wave_representatives(d: EmbeddedDiagram, v: Wave):
    """Every chord (face, end, end) in the parallel class of ``v``."""
    s = d.words[v.base]
    for fi, x, y in _chords(d, v.base):
        m1, m2 = split_word(s, x[1], y[1])
        if pair_key((cyclic_reduce(m1), cyclic_reduce(m2))) == v.key():
            yield fi, x, y


def wave_crossing(d: EmbeddedDiagram, v1: Wave, v2: Wave) -> Optional[int]:
    """Crossings of two waves drawn in a common face, or None if no chords
    of their classes share a face.  Chords of one face are straight, so the
    count is 0 or 1 by endpoint interleaving along the face boundary."""
    orbs = face_orbits(d)
    counts = set()
    for f1, a, b in wave_representatives(d, v1):
        for f2, p, q in wave_representatives(d, v2):
            if f1 != f2:
                continue
            orb = list(orbs[f1])
            lo, hi = sorted((orb.index(a), orb.index(b)))
            counts.add(sum(lo < orb.index(z) < hi for z in (p, q)) % 2)
    return min(counts) if counts else None


def distinguished_wave(d: EmbeddedDiagram) -> Wave:
    if d.ncurves != 1:
        raise DiagramNotEligible("distinguished waves are defined for single-curve diagrams")
    form = derive_graph(d).form
    if form == "FormIII":
        raise DiagramNotEligible(f"diagram of {d.words[0]} is disconnected or has a cut vertex")
    waves = find_waves(d, 0)
    if form == "FormII":
        hs = [v for v in waves if v.kind == "horizontal"]
        if len(hs) != 1:
            raise WaveError(f"expected one horizontal wave for {d.words[0]}, found {len(hs)}")
        return hs[0]
    if len(waves) != 1:
        raise WaveError(f"expected a unique wave for {d.words[0]}, found {len(waves)}")
    return waves[0]


# ---------------------------------------------------------------------------
# surgery

def _relabel(d: EmbeddedDiagram, c: int, word: str) -> EmbeddedDiagram:
    """Rename curve c to ``word``, a rotation of its word or of its inverse."""
    old = d.words[c]
    n = len(old)
    for inv in (False, True):
        base = inverse(old) if inv else old
        k = (base + base).find(word)
        if len(word) == n and k >= 0:
            break
    else:
        raise ValueError(f"{word} is not a rotation of {old} or its inverse")

    def mp(occ):
        if occ[0] != c:
            return occ
        j = n - 1 - occ[1] if inv else occ[1]
        return (c, (j - k) % n)

    slots = {X: tuple(mp(o) for o in L) for X, L in d.slots.items()}
    words = tuple(word if i == c else w for i, w in enumerate(d.words))
    return EmbeddedDiagram(words, slots)


def canonical_diagram(d: EmbeddedDiagram) -> EmbeddedDiagram:
    for c, w in enumerate(d.words):
        d = _relabel(d, c, canonical(w, UNORIENTED))
    return d


def _cancel_seam(letters: list, slots: Dict[str, list]) -> None:
    """Remove inverse pairs across the seam of one curve.

    ``letters`` holds (letter, tag) with tags naming slots.  The two
    crossings of a cancelling pair bound a bigon, so they must be adjacent
    on their circle.
    """
    while len(letters) >= 2 and letters[0][0] == letters[-1][0].swapcase():
        X = letters[0][0].upper()
        L = slots[X]
        p, q = L.index(letters[0][1]), L.index(letters[-1][1])
        if abs(p - q) not in (1, len(L) - 1):
            raise DiagramError("cancelling crossings are not adjacent; surgery pair is not a bigon reduction")
        for t in sorted((p, q), reverse=True):
            L.pop(t)
        letters.pop(0)
        letters.pop()


def surgery(d: EmbeddedDiagram, wave: Wave) -> MeridianPair:
    base = wave.base
    w = d.words[base]
    n = len(w)
    i, j = wave.arcs
    parts = []
    for lo, hi in ((i, j), (j, i)):
        idx = [(lo + 1 + t) % n for t in range((hi - lo) % n)]
        parts.append([(w[k], (base, k)) for k in idx])
    slots = {X: list(L) for X, L in d.slots.items()}
    others = [c for c in range(d.ncurves) if c != base]
    for part in parts:
        _cancel_seam(part, slots)
    # renumber: the two new curves first, then the remaining curves
    tag = {}
    for c, part in enumerate(parts):
        for k, (_, t) in enumerate(part):
            tag[t] = (c, k)
    for c2, c in enumerate(others, start=2):
        for k in range(len(d.words[c])):
            tag[(c, k)] = (c2, k)
    words = tuple("".join(ch for ch, _ in part) for part in parts) + tuple(d.words[c] for c in others)
    new_slots = {X: tuple(tag[o] for o in L) for X, L in slots.items()}
    pd = EmbeddedDiagram(words, new_slots)
    validate(pd)
    oriented = words[:2]
    pd = canonical_diagram(pd)
    if sort_key(pd.words[1]) < sort_key(pd.words[0]):
        pd = pd.restrict([1, 0] + list(range(2, pd.ncurves)))
        oriented = oriented[::-1]
    return MeridianPair(pd.words[0], pd.words[1], pd, w, wave, d, oriented=oriented)


# ---------------------------------------------------------------------------
# pipelines

def _eligible_minimal(w: str):
    s, trace = whitehead_minimize(w)
    s = s.text
    if is_primitive_or_proper_power(s).terminal:
        raise BoundaryCompressible(f"{w} is primitive or a proper power")
    d = embed_single_word(s)
    if derive_graph(d).form == "FormIII":
        raise BoundaryCompressible(f"minimal diagram of {w} is disconnected or has a cut vertex")
    return s, trace, d


def distinguished_meridian_pair(w) -> MeridianPair:
    """Surgery along the distinguished wave of a minimal diagram of ``w``.

    The words are given in the basis of the minimal diagram; ``trace``
    records the moves from ``w`` to that basis.
    """
    w0 = cyclic_reduce(text_of(w))
    if not w0:
        raise BoundaryCompressible("trivial word")
    s, trace, d = _eligible_minimal(w0)
    mp = surgery(d, distinguished_wave(d))
    return MeridianPair(mp.m1, mp.m2, mp.diagram, s, mp.wave, d, tuple(trace), w0, mp.oriented)


def realization_pairs(w, limit: int = 64) -> Dict[Tuple[str, str], int]:
    """Distinguished pairs over all realizations of the minimal form of ``w``.

    A word can be carried by curves that no homeomorphism of H relates, and
    these can have different distinguished pairs.  Keys are written in the
    basis of ``w``; values count the realizations giving each pair.
    """
    w0 = cyclic_reduce(text_of(w))
    s, trace = whitehead_minimize(w0)
    s = s.text
    if is_primitive_or_proper_power(s).terminal:
        raise BoundaryCompressible(f"{w0} is primitive or a proper power")
    back = invert_trace(trace)
    out: Dict[Tuple[str, str], int] = {}
    for d in all_embeddings([s], limit):
        if derive_graph(d).form == "FormIII":
            continue
        mp = surgery(d, distinguished_wave(d))
        key = pair_key(tuple(apply_trace(m, back) for m in mp.words))
        out[key] = out.get(key, 0) + 1
    return out


def vertical_slope_pair(w) -> MeridianPair:
    w0 = cyclic_reduce(text_of(w))
    if not w0 or is_primitive_or_proper_power(w0).terminal:
        raise NotPositive(f"{w0} is primitive or a proper power")
    # a positive diagram of the input is used as given: vertical waves
    # depend on the diagram, not only on the curve
    if derive_graph(embed_single_word(w0)).form == "FormII":
        s, trace = w0, []
    else:
        found = positive_member(w0)
        if found is None:
            raise NotPositive(f"{w0} has no positive minimal diagram")
        s, trace = found
    d = embed_single_word(s)
    vs = [v for v in find_waves(d, 0) if v.kind == "vertical"]
    if not vs:
        raise WaveError(f"no vertical wave in positive diagram of {s}")
    mp = surgery(d, vs[0])
    return MeridianPair(mp.m1, mp.m2, mp.diagram, s, vs[0], d, tuple(trace), w0, mp.oriented)


def conservation_holds(mp: MeridianPair) -> bool:
    r1, r2 = mp.oriented or mp.words
    a = AbelianImage(*exponent_sums(r1)) + AbelianImage(*exponent_sums(r2))
    b = AbelianImage(*exponent_sums(mp.base))
    return a == b or a == -b
