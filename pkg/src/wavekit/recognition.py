"""Fillings, recognition of S3, S1xS2 and (S1xS2)#L(p,q), (1,1) tunnels."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .fatgraph import (
    DiagramError, EmbeddedDiagram, NotRealizable, all_embeddings, curves_parallel,
    derive_graph, embed_words, signed_intersection,
)
from .reduction import (
    apply_trace, cmz_is_primitive, invert_trace, is_primitive_or_proper_power,
    minimize_words, whitehead_minimize,
)
from .waves import (
    MeridianPair, Wave, WaveError, distinguished_meridian_pair,
    distinguished_wave, find_waves, pair_key, split_word, surgery,
)
from .word_core import cyclic_reduce, exponent_sums, text_of

log = logging.getLogger(__name__)

MAX_ITERATIONS = 10 ** 4

S3 = "S3"
S1xS2 = "S1xS2"
CONNECT_SUM = "S1xS2#L(p)"
NOT_IN_FAMILY = "NotInFamily"
NO_WAVE = "NoWaveFound"
DOES_NOT_EMBED = "DoesNotEmbed"


class RecognitionError(Exception):
    pass


class InputInvalid(RecognitionError):
    pass


class NotAKnotExteriorInS3orS1xS2(RecognitionError):
    pass


# ---------------------------------------------------------------------------
# homology

@dataclass(frozen=True)
class FillingHomology:
    """Z^2 modulo the exponent-sum vectors, as invariant factors.

    A factor 0 stands for a copy of Z; factors equal to 1 are kept so that
    there are always two.
    """
    factors: Tuple[int, int]

    @property
    def free_rank(self) -> int:
        return sum(1 for f in self.factors if f == 0)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(f for f in self.factors if f > 1)

    @property
    def order(self) -> int:
        """|H1| (0 when infinite)."""
        if self.free_rank:
            return 0
        out = 1
        for f in self.factors:
            out *= f
        return out

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_2x2(m) -> Tuple[int, int]:
    (a, b), (c, d) = m
    d1 = gcd(gcd(a, b), gcd(c, d))
    if d1 == 0:
        return (0, 0)
    return (d1, abs(a * d - b * c) // d1)


def homology_of_filling(w1, w2) -> FillingHomology:
    return FillingHomology(smith_2x2((exponent_sums(text_of(w1)), exponent_sums(text_of(w2)))))


# ---------------------------------------------------------------------------
# recognition

@dataclass
class RecognitionResult:
    verdict: str
    p: Optional[int] = None
    reason: str = ""
    homology: Optional[FillingHomology] = None
    trace: List[Tuple[str, str]] = field(default_factory=list)

    def __str__(self):
        if self.verdict == CONNECT_SUM:
            return f"S1xS2#L({self.p},q)"
        if self.verdict == NOT_IN_FAMILY:
            return f"NotInFamily({self.reason})"
        return self.verdict

    @property
    def in_family(self) -> bool:
        return self.verdict in (S3, S1xS2, CONNECT_SUM)


def _homology_verdict(h: FillingHomology, trace) -> RecognitionResult:
    if h.is_trivial():
        return RecognitionResult(S3, homology=h, trace=trace)
    if h.free_rank == 1 and not h.torsion:
        return RecognitionResult(S1xS2, homology=h, trace=trace)
    if h.free_rank == 1 and len(h.torsion) == 1:
        return RecognitionResult(CONNECT_SUM, p=h.torsion[0], homology=h, trace=trace)
    return RecognitionResult(NOT_IN_FAMILY, reason=f"homology {h}", homology=h, trace=trace)


@dataclass
class PairWave:
    """Distinguished wave of one member of a pair, found in a joint diagram
    where that member is minimal.  Index 0 of ``diagram`` is the member."""
    member: str
    partner: str
    diagram: EmbeddedDiagram
    wave: Wave
    key: Tuple[str, str]  # surgery pair written in the caller's basis


def distinguished_in_pair(words: Sequence[str], c: int,
                          diagram: Optional[EmbeddedDiagram] = None) -> Optional[PairWave]:
    """Distinguished wave based at ``words[c]``, as drawn together with the
    other curve.  Words with several realizations are pinned down by the
    joint diagram, which a single-word embedding would not do.  ``diagram``,
    when given and already minimal for ``words[c]``, is used as drawn."""
    if is_primitive_or_proper_power(words[c]).terminal:
        return None
    s, t = whitehead_minimize(words[c])
    s = s.text
    o = apply_trace(words[1 - c], t)
    try:
        if not t and diagram is not None and tuple(diagram.words) == tuple(words):
            dj = diagram.restrict([c, 1 - c])
        else:
            dj = embed_words((s, o), "pair")
        omega = distinguished_wave(dj.restrict([0]))
    except (DiagramError, WaveError):
        return None
    back = invert_trace(t)
    key = pair_key(tuple(apply_trace(m, back) for m in omega.words))
    return PairWave(s, o, dj, omega, key)


def pick_wave(d: EmbeddedDiagram) -> Optional[Tuple[int, Wave, bool]]:
    """A wave based at one curve of a two-curve diagram.

    Waves realising their base curve's distinguished wave are preferred.
    Returns (base, wave, distinguished) or None.
    """
    found = []
    for c in range(d.ncurves):
        ws = find_waves(d, c)
        if not ws:
            continue
        pw = distinguished_in_pair(d.words, c, d)
        for v in ws:
            if pw is not None and v.key() == pw.key:
                return c, v, True
        found.append((c, ws[0], False))
    return found[0] if found else None


def recognize_words(w1, w2, check_input: bool = True) -> RecognitionResult:
    pair = (cyclic_reduce(text_of(w1)), cyclic_reduce(text_of(w2)))
    if not all(pair):
        raise InputInvalid("a curve is trivial")
    if check_input:
        try:
            embed_words(pair, "pair")
        except NotRealizable as e:
            raise InputInvalid(f"curves are not disjoint simple closed curves: {e}") from None
        # equal words can sit on disjoint curves that are not parallel
        if pair_key(pair)[0] == pair_key(pair)[1] and all(
                curves_parallel(d, 0, 1) for d in all_embeddings(pair)):
            raise InputInvalid("curves are parallel")
    return _procedure(pair, None)


def recognize_closed(d: EmbeddedDiagram, check_input: bool = True) -> RecognitionResult:
    """Recognise the closed manifold of a two-curve diagram.

    Pairs coming from surgery on a nonseparating curve are never parallel,
    so callers holding such a pair pass ``check_input=False``.
    """
    if d.ncurves != 2:
        raise InputInvalid("need exactly two curves")
    if check_input and curves_parallel(d, 0, 1):
        raise InputInvalid("curves are parallel")
    return _procedure(tuple(d.words), d)


def _procedure(pair: Tuple[str, str], geo: Optional[EmbeddedDiagram]) -> RecognitionResult:
    """The recognition loop.  ``geo`` is the diagram of the current pair as
    drawn, when known; it is used whenever the pair needs no basis change,
    and otherwise the minimised words are embedded afresh."""
    trace: List[Tuple[str, str]] = []
    last = None
    for _ in range(MAX_ITERATIONS):
        trace.append(pair)
        h = homology_of_filling(*pair)
        if any(is_primitive_or_proper_power(w).terminal for w in pair):
            return _homology_verdict(h, trace)
        words, moves = minimize_words(pair)
        size = sum(map(len, words))
        if last is not None and size >= last:
            raise RecognitionError(f"complexity did not drop at {words}")
        last = size
        if geo is not None and not moves and tuple(geo.words) == tuple(words):
            d = geo
        else:
            try:
                d = embed_words(words, "pair")
            except NotRealizable:
                log.warning("pair %s has no diagram in its minimal basis", words)
                return RecognitionResult(NOT_IN_FAMILY, reason="NoEligibleDiagram", homology=h, trace=trace)
        if derive_graph(d).form == "FormIII":
            log.info("no connected cut-vertex-free diagram for %s", words)
            return RecognitionResult(NOT_IN_FAMILY, reason="NoEligibleDiagram", homology=h, trace=trace)
        picked = pick_wave(d)
        if picked is None:
            return RecognitionResult(NOT_IN_FAMILY, reason="no wave", homology=h, trace=trace)
        base, _, _ = picked
        S = 1 - base
        pw = distinguished_in_pair(words, S, d)
        if pw is None:
            return RecognitionResult(NO_WAVE, reason=f"no distinguished wave for {words[S]}",
                                     homology=h, trace=trace)
        dj, omega = pw.diagram, pw.wave
        n = signed_intersection(dj, 1, omega)
        if n != 0:
            return RecognitionResult(NOT_IN_FAMILY, reason=f"wave intersection {n}", homology=h, trace=trace)
        try:
            sp = surgery(dj, omega)
            pair, geo = sp.words, sp.diagram.restrict([0, 1])
        except DiagramError:
            m1, m2 = split_word(pw.member, *omega.arcs)
            pair, geo = (cyclic_reduce(m1), cyclic_reduce(m2)), None
    raise RecognitionError("iteration cap reached")


# ---------------------------------------------------------------------------
# knot exteriors

@dataclass
class FamilyResult:
    verdict: str  # S3 | S1xS2 | S1xS2#L(p) | DoesNotEmbed
    p: Optional[int]
    pair: MeridianPair
    recognition: RecognitionResult

    def __str__(self):
        if self.verdict == CONNECT_SUM:
            return f"S1xS2#L({self.p},q)"
        return self.verdict


def embeds_in_family(w) -> FamilyResult:
    mp = distinguished_meridian_pair(w)
    r = recognize_closed(mp.diagram, check_input=False)
    verdict = r.verdict if r.in_family else DOES_NOT_EMBED
    return FamilyResult(verdict, r.p, mp, r)


def is_11_tunnel(w) -> bool:
    fam = embeds_in_family(w)
    if fam.verdict not in (S3, S1xS2):
        raise NotAKnotExteriorInS3orS1xS2(f"{text_of(w)}: filling is {fam.verdict}")
    return cmz_is_primitive(fam.pair.m1) or cmz_is_primitive(fam.pair.m2)


@dataclass
class Constituent:
    word: str
    primitive: bool
    homology: FillingHomology


@dataclass
class ConstituentReport:
    word: str
    family: str
    constituents: List[Constituent]
    one_one: Optional[bool]


def canonical_constituents(w) -> ConstituentReport:
    fam = embeds_in_family(w)
    if fam.verdict == DOES_NOT_EMBED:
        raise NotAKnotExteriorInS3orS1xS2(f"{text_of(w)} does not embed in the family")
    mp = fam.pair
    cons = [Constituent(m, cmz_is_primitive(m), homology_of_filling(mp.base, m)) for m in mp.words]
    one_one = any(c.primitive for c in cons) if fam.verdict in (S3, S1xS2) else None
    return ConstituentReport(cyclic_reduce(text_of(w)), str(fam), cons, one_one)
