"""Fat-graph model of curves on the boundary of a genus-two handlebody.

Cutting along the meridian disks D_A, D_B leaves a sphere with four holes
A+, A-, B+, B-.  A curve becomes a family of disjoint arcs between the holes.

Conventions
-----------
* Occurrence ``(c, k)`` is letter ``k`` of curve ``c``.
* A positive letter X is crossed from the X- side to the X+ side, so the
  curve *enters* on X- and *exits* on X+.  Inverse letters swap the roles.
* Arc ``(c, k)`` runs from the exit side of letter ``k`` to the entry side
  of letter ``k + 1`` (indices mod the word length).
* ``slots[X]`` is the counterclockwise order of occurrences around X+.  Around
  X- the same occurrences appear in reversed order (the disk is glued back by
  a reflection), so position p on X+ faces position n-1-p on X-.
* A dart is ``(c, k, end)`` with end 0 at the start of arc (c, k) and end 1
  at its finish.  Faces are orbits of ``phi = sigma . alpha``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .word_core import cyclic_reduce, is_cyclically_reduced, is_rotation, text_of

VERTICES = ("A+", "A-", "B+", "B-")


class DiagramError(Exception):
    pass


class NotRealizable(DiagramError):
    pass


class FormatError(DiagramError):
    pass


class InvariantViolation(DiagramError):
    def __init__(self, name: str, detail: str = ""):
        self.name = name
        super().__init__(f"{name}: {detail}" if detail else name)


def exit_vertex(ch: str) -> str:
    return ch.upper() + ("+" if ch.isupper() else "-")


def entry_vertex(ch: str) -> str:
    return ch.upper() + ("-" if ch.isupper() else "+")


def edge_type(x: str, y: str) -> frozenset:
    """Edge of the diagram graph produced by the letter pair ``xy``."""
    return frozenset((exit_vertex(x), entry_vertex(y)))


EDGE_AA = frozenset(("A+", "A-"))
EDGE_BB = frozenset(("B+", "B-"))
EDGE_PM = frozenset(("A+", "B-"))  # pairs AB, ba
EDGE_MP = frozenset(("A-", "B+"))  # pairs BA, ab
EDGE_PP = frozenset(("A+", "B+"))  # pairs Ab, Ba
EDGE_MM = frozenset(("A-", "B-"))  # pairs aB, bA
EDGE_TYPES = (EDGE_AA, EDGE_BB, EDGE_PM, EDGE_MP, EDGE_PP, EDGE_MM)


def edge_name(e: frozenset) -> str:
    return "".join(sorted(e))


@dataclass(frozen=True)
class Face:
    darts: tuple  # boundary walk, one dart per arc side
    chi: int
    holes: tuple = ()  # isolated vertex circles lying in this piece


@dataclass(frozen=True)
class DiagramGraph:
    multiplicity: Dict[frozenset, int]
    form: str  # FormI | FormII | FormIII
    params: Optional[Tuple[int, int, int]] = None  # (a, c, d) for FormII

    def edges(self):
        return {edge_name(e): m for e, m in self.multiplicity.items() if m}


@dataclass(frozen=True)
class EmbeddedDiagram:
    words: Tuple[str, ...]
    slots: Dict[str, Tuple[Tuple[int, int], ...]] = field(hash=False)

    # -- basic structure --
    @property
    def ncurves(self):
        return len(self.words)

    def letter(self, occ):
        return self.words[occ[0]][occ[1]]

    def arcs(self):
        return [(c, k) for c, w in enumerate(self.words) for k in range(len(w))]

    def arc_edge(self, arc) -> frozenset:
        c, k = arc
        w = self.words[c]
        return edge_type(w[k], w[(k + 1) % len(w)])

    def rotation(self) -> Dict[str, List[tuple]]:
        return _rotation(self.words, self.slots)

    def restrict(self, curves: Sequence[int]) -> "EmbeddedDiagram":
        """Sub-diagram on the given curves (renumbered in the given order)."""
        ren = {c: i for i, c in enumerate(curves)}
        slots = {X: tuple((ren[c], k) for c, k in L if c in ren) for X, L in self.slots.items()}
        return EmbeddedDiagram(tuple(self.words[c] for c in curves), slots)

    def slot_lists(self) -> Dict[str, tuple]:
        """The four vertex circles explicitly (X- reversed from X+)."""
        return {
            "A+": self.slots["A"], "A-": tuple(reversed(self.slots["A"])),
            "B+": self.slots["B"], "B-": tuple(reversed(self.slots["B"])),
        }


# ---------------------------------------------------------------------------
# ribbon graph machinery on (possibly partial) slot orders

def _dart_at(words, occ, vertex):
    """The dart occupying occurrence ``occ``'s slot on ``vertex``."""
    c, k = occ
    w = words[c]
    if exit_vertex(w[k]) == vertex:
        return (c, k, 0)
    return (c, (k - 1) % len(w), 1)


def _rotation(words, slots, arcs_present=None):
    rot = {}
    for X in "AB":
        order = list(slots[X])
        for vertex, seq in ((X + "+", order), (X + "-", order[::-1])):
            ds = []
            for occ in seq:
                d = _dart_at(words, occ, vertex)
                if arcs_present is None or (d[0], d[1]) in arcs_present:
                    ds.append(d)
            rot[vertex] = ds
    return rot


def _alpha(d):
    return (d[0], d[1], 1 - d[2])


def _phi_map(rot):
    sigma = {}
    for ds in rot.values():
        n = len(ds)
        for i, d in enumerate(ds):
            sigma[d] = ds[(i + 1) % n]
    return {d: sigma[_alpha(d)] for d in sigma}


def _orbits(phi):
    seen = set()
    out = []
    for d in sorted(phi):
        if d in seen:
            continue
        orb = []
        x = d
        while x not in seen:
            seen.add(x)
            orb.append(x)
            x = phi[x]
        out.append(tuple(orb))
    return out


def _vertex_of(words, d):
    c, k, end = d
    w = words[c]
    return exit_vertex(w[k]) if end == 0 else entry_vertex(w[(k + 1) % len(w)])


def _components(words, arcs, vertices):
    g = nx.Graph()
    g.add_nodes_from(vertices)
    for c, k in arcs:
        g.add_edge(_vertex_of(words, (c, k, 0)), _vertex_of(words, (c, k, 1)))
    return list(nx.connected_components(g))


def _is_planar(words, slots, arcs_present):
    if not arcs_present:
        return True
    rot = _rotation(words, slots, arcs_present)
    used = [v for v, ds in rot.items() if ds]
    F = len(_orbits(_phi_map(rot)))
    K = len(_components(words, arcs_present, used))
    return len(used) - len(arcs_present) + F == 2 * K


# ---------------------------------------------------------------------------
# embedding search

def _search(words: Tuple[str, ...], limit: int = 1):
    """Depth-first search over slot insertions, pruned by planarity."""
    order = [(c, k) for c, w in enumerate(words) for k in range(len(w))]
    lens = [len(w) for w in words]
    slots = {"A": [], "B": []}
    placed = set()
    arcs = set()
    found = []

    def new_arcs(occ):
        c, k = occ
        n = lens[c]
        out = []
        if (c, (k - 1) % n) in placed:
            out.append((c, (k - 1) % n))
        if (c, (k + 1) % n) in placed and (k + 1) % n != k:
            out.append((c, k))
        elif n == 1:
            out.append((c, 0))
        return out

    def rec(i):
        if len(found) >= limit:
            return
        if i == len(order):
            found.append({X: tuple(L) for X, L in slots.items()})
            return
        occ = order[i]
        X = words[occ[0]][occ[1]].upper()
        L = slots[X]
        placed.add(occ)
        add = [a for a in new_arcs(occ) if a not in arcs]
        arcs.update(add)
        for pos in range(max(1, len(L))):
            L.insert(pos, occ)
            if _is_planar(words, slots, arcs):
                rec(i + 1)
            L.pop(pos)
            if len(found) >= limit:
                break
        arcs.difference_update(add)
        placed.discard(occ)

    rec(0)
    return found


def _check_words(words):
    for w in words:
        if not w:
            raise NotRealizable("empty word")
        if not is_cyclically_reduced(w):
            raise NotRealizable(f"{w} is not cyclically reduced")


def embed_words(words: Sequence, what: str = "curves") -> EmbeddedDiagram:
    words = tuple(text_of(w) for w in words)
    _check_words(words)
    sols = _search(words)
    if not sols:
        raise NotRealizable(f"no planar slot ordering for {what} {' '.join(words)}")
    d = EmbeddedDiagram(words, sols[0])
    validate(d)
    return d


def embed_single_word(w) -> EmbeddedDiagram:
    return embed_words([w], "word")


def count_embeddings(words: Sequence, limit: int = 64) -> int:
    return len(_search(tuple(text_of(w) for w in words), limit))


def all_embeddings(words: Sequence, limit: int = 64) -> List[EmbeddedDiagram]:
    """Every slot ordering realizing ``words``, mirror images included."""
    words = tuple(text_of(w) for w in words)
    _check_words(words)
    return [EmbeddedDiagram(words, s) for s in _search(words, limit)]


# ---------------------------------------------------------------------------
# validation, read-back

def trace_curves(d: EmbeddedDiagram) -> List[str]:
    """Follow arcs geometrically through the glued disks and read words."""
    lists = d.slot_lists()
    pos_of = {v: {occ: p for p, occ in enumerate(L)} for v, L in lists.items()}
    # arc endpoints as (vertex, position)
    start_at = {}
    finish_of = {}
    for arc in d.arcs():
        c, k = arc
        w = d.words[c]
        nxt = (c, (k + 1) % len(w))
        sv, fv = exit_vertex(w[k]), entry_vertex(w[nxt[1]])
        start_at[(sv, pos_of[sv][(c, k)])] = arc
        finish_of[arc] = (fv, pos_of[fv][nxt])
    out = []
    seen = set()
    for arc0 in d.arcs():
        if arc0 in seen:
            continue
        letters = []
        arc = arc0
        while arc not in seen:
            seen.add(arc)
            v, p = finish_of[arc]
            X, side = v[0], v[1]
            n = len(lists[v])
            other = X + ("+" if side == "-" else "-")
            q = n - 1 - p
            letters.append(X if side == "-" else X.lower())
            arc = start_at.get((other, q))
            if arc is None:
                raise InvariantViolation("read-back", f"no arc leaves {other}:{q}")
        out.append("".join(letters))
    return out


def validate(d: EmbeddedDiagram) -> None:
    words = d.words
    for X in "AB":
        L = d.slots[X]
        want = sorted((c, k) for c, w in enumerate(words) for k, ch in enumerate(w) if ch.upper() == X)
        if sorted(L) != want or len(set(L)) != len(L):
            raise InvariantViolation("slot counts", f"{X} slots do not match the letters of the words")
    arcs = set(d.arcs())
    if not _is_planar(words, d.slots, arcs):
        raise InvariantViolation("surface consistency", "arcs do not embed in the four-holed sphere")
    chi = sum(f.chi for f in faces(d))
    if chi != len(arcs) - 2:
        raise InvariantViolation("surface consistency", f"chi sum {chi} != {len(arcs) - 2}")
    traced = trace_curves(d)
    if len(traced) != len(words) or not all(any(is_rotation(w, t) for t in traced) for w in words):
        raise InvariantViolation("read-back", f"traced {traced} for {list(words)}")


# ---------------------------------------------------------------------------
# faces

def faces(d: EmbeddedDiagram) -> List[Face]:
    """Pieces of the four-holed sphere cut along the arcs.

    Faces of each connected component are disks.  When the arc graph is
    disconnected, one face of each component (the one holding its least
    dart) is merged together with the isolated circles into a single piece;
    this fixes one of the possible nestings.
    """
    arcs = d.arcs()
    if not arcs:
        return [Face((), -2, VERTICES)]
    rot = d.rotation()
    orbs = _orbits(_phi_map(rot))
    used = [v for v, ds in rot.items() if ds]
    comps = _components(d.words, arcs, used)
    isolated = tuple(v for v in VERTICES if v not in used)
    k = len(comps) + len(isolated)
    if k == 1:
        return [Face(o, 1) for o in orbs]
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    chosen = {}
    for o in orbs:
        ci = comp_of[_vertex_of(d.words, o[0])]
        chosen.setdefault(ci, o)
    merged = tuple(x for o in chosen.values() for x in o)
    out = [Face(merged, 2 - k, isolated)]
    out += [Face(o, 1) for o in orbs if o not in chosen.values()]
    return out


def complement_components(d: EmbeddedDiagram) -> List[List[Face]]:
    """Components of the boundary surface cut along the curves.

    Pieces of the four-holed sphere are joined across the disks: the stretch
    of X+ between slots p and p+1 is glued to the stretch of X- between the
    same two crossings.
    """
    fs = faces(d)
    owner = {}
    for i, f in enumerate(fs):
        for x in f.darts:
            owner[x] = i
    parent = list(range(len(fs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    rot = d.rotation()
    for X in "AB":
        plus, minus = rot[X + "+"], rot[X + "-"]
        n = len(plus)
        for p in range(n):
            a = owner[plus[(p + 1) % n]]
            b = owner[minus[(n - 1 - p) % n]]
            parent[find(a)] = find(b)
    groups: Dict[int, List[Face]] = {}
    for i, f in enumerate(fs):
        groups.setdefault(find(i), []).append(f)
    return list(groups.values())


def curves_parallel(d: EmbeddedDiagram, c1: int, c2: int) -> bool:
    """Whether curves c1 and c2 cobound an annulus.

    Reduced curves meet the disks minimally, so such an annulus is a
    complementary component made of rectangles, each with one arc side from
    either curve.  Equal words alone do not make curves parallel.  Slot
    orders do not say how the pieces of a disconnected diagram nest; the
    nesting fixed by :func:`faces` is assumed then.
    """
    if c1 == c2 or len(d.words[c1]) != len(d.words[c2]):
        return False
    for comp in complement_components(d):
        if all(len(f.darts) == 2 and {x[0] for x in f.darts} == {c1, c2} for f in comp):
            return True
    return False


def separates(d: EmbeddedDiagram) -> bool:
    """Whether the curves of ``d`` together cut the surface apart."""
    return len(complement_components(d)) > 1


def face_orbits(d: EmbeddedDiagram) -> List[tuple]:
    """Raw phi-orbits (one per face of each component)."""
    return _orbits(_phi_map(d.rotation()))


# ---------------------------------------------------------------------------
# derived graph

def pair_counts(words) -> Counter:
    cnt = Counter()
    for w in words:
        w = text_of(w)
        n = len(w)
        for k in range(n):
            cnt[edge_type(w[k], w[(k + 1) % n])] += 1
    return cnt


def _graph_from_counts(cnt) -> DiagramGraph:
    mult = {e: cnt.get(e, 0) for e in EDGE_TYPES}
    g = _nx_graph(mult)
    two_conn = nx.is_connected(g) and not any(True for _ in nx.articulation_points(g))
    if not two_conn:
        return DiagramGraph(mult, "FormIII")
    if mult[EDGE_PP] == 0 or mult[EDGE_PM] == 0:
        c = mult[EDGE_PM] + mult[EDGE_PP]
        return DiagramGraph(mult, "FormII", (mult[EDGE_AA], c, mult[EDGE_BB]))
    return DiagramGraph(mult, "FormI")


def _nx_graph(mult) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(VERTICES)
    for e, m in mult.items():
        if m:
            g.add_edge(*sorted(e))
    return g


def derive_graph(d: EmbeddedDiagram) -> DiagramGraph:
    return _graph_from_counts(pair_counts(d.words))


def graph_of_words(words) -> DiagramGraph:
    return _graph_from_counts(pair_counts(words))


def is_connected(g: DiagramGraph) -> bool:
    return nx.is_connected(_nx_graph(g.multiplicity))


def has_cut_vertex(g: DiagramGraph) -> bool:
    G = _nx_graph(g.multiplicity)
    if not nx.is_connected(G):
        # a cut vertex only makes sense inside the nontrivial component
        G = G.subgraph([v for v in G if G.degree(v)])
    return any(True for _ in nx.articulation_points(G))


def is_eligible(g: DiagramGraph) -> bool:
    return g.form != "FormIII"


def is_positive_graph(g: DiagramGraph) -> bool:
    return g.form == "FormII"


# ---------------------------------------------------------------------------
# signed intersection

def boundary_sequence(d: EmbeddedDiagram, base: int, face_darts: tuple) -> list:
    """Boundary of a face of the base curve's own diagram, with the points
    where the other curves' arcs meet it.

    Entries are ``("side", dart)`` for base-curve arc sides and
    ``("pt", dart)`` for endpoints of other arcs, in boundary order.
    """
    full = d.rotation()
    pos = {}
    for v, ds in full.items():
        for p, x in enumerate(ds):
            pos[x] = (v, p)
    sub = _rotation(d.words, d.slots, {a for a in d.arcs() if a[0] == base})
    phi = _phi_map(sub)
    seq = []
    for x in face_darts:
        seq.append(("side", x))
        a = _alpha(x)
        v, p = pos[a]
        _, q = pos[phi[x]]
        ds = full[v]
        n = len(ds)
        j = (p + 1) % n
        while j != q:
            seq.append(("pt", ds[j]))
            j = (j + 1) % n
    return seq


def signed_intersection(d: EmbeddedDiagram, curve: int, arc) -> int:
    """Algebraic intersection of ``curve`` with a wave based at another curve.

    ``arc`` is a ``waves.Wave`` (or anything with ``base`` and ``ends``),
    whose endpoint darts refer to arcs of its base curve in ``d``.
    """
    base = arc.base
    if base == curve:
        raise ValueError("the curve must differ from the wave's base")
    sub = _rotation(d.words, d.slots, {a for a in d.arcs() if a[0] == base})
    orbs = _orbits(_phi_map(sub))
    e1, e2 = arc.ends
    host = None
    for flip in (False, True):
        a1, a2 = (_alpha(e1), _alpha(e2)) if flip else (e1, e2)
        for o in orbs:
            if a1 in o and a2 in o:
                host, e1, e2 = o, a1, a2
                break
        if host:
            break
    if host is None:
        raise DiagramError("wave endpoints do not share a face of the base curve")
    seq = boundary_sequence(d, base, host)
    i1 = seq.index(("side", e1))
    i2 = seq.index(("side", e2))
    lo, hi = min(i1, i2), max(i1, i2)
    where = {}
    for idx, (kind, x) in enumerate(seq):
        if kind == "pt" and x[0] == curve:
            where[x] = lo < idx < hi
    total = 0
    for (c, k, end), inside in where.items():
        if end != 0:
            continue
        other = where.get((c, k, 1))
        if other is None or other == inside:
            continue
        total += 1 if inside else -1
    return total if i1 < i2 else -total


# ---------------------------------------------------------------------------
# file format

_SLOT_RE = re.compile(r"^slots\s+([AB][+-])\s*:\s*(.*)$")


def format_diagram(d: EmbeddedDiagram) -> str:
    lines = ["g2diagram 1"]
    for c, w in enumerate(d.words):
        lines.append(f"curve {c} {w}")
    for v, L in d.slot_lists().items():
        lines.append(f"slots {v} : " + " ".join(f"{c}.{k}" for c, k in L))
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> EmbeddedDiagram:
    header = False
    curves = {}
    lists = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header:
            if line.split() != ["g2diagram", "1"]:
                raise FormatError(f"line {lineno}: expected header 'g2diagram 1'")
            header = True
            continue
        parts = line.split()
        if parts[0] == "curve":
            if len(parts) != 3 or not re.fullmatch(r"[AaBb]+", parts[2]):
                raise FormatError(f"line {lineno}: bad curve line")
            curves[parts[1]] = parts[2]
            continue
        m = _SLOT_RE.match(line)
        if not m:
            raise FormatError(f"line {lineno}: unrecognised line")
        occs = []
        for tok in m.group(2).split():
            cid, _, idx = tok.rpartition(".")
            if not cid or not idx.isdigit():
                raise FormatError(f"line {lineno}: bad slot {tok!r}")
            occs.append((cid, int(idx)))
        lists[m.group(1)] = occs
    if not header:
        raise FormatError("missing header")
    if not curves:
        raise FormatError("no curves")
    ids = list(curves)
    num = {cid: i for i, cid in enumerate(ids)}
    words = tuple(curves[cid] for cid in ids)
    slots = {}
    for X in "AB":
        plus, minus = lists.get(X + "+", []), lists.get(X + "-", [])
        try:
            plus = [(num[c], k) for c, k in plus]
            minus = [(num[c], k) for c, k in minus]
        except KeyError as e:
            raise FormatError(f"unknown curve id {e}") from None
        if not _cyclic_equal(minus, plus[::-1]):
            raise InvariantViolation("gluing reversal", f"{X}- is not the reversal of {X}+")
        slots[X] = tuple(plus)
    for w in words:
        if not is_cyclically_reduced(w):
            raise InvariantViolation("reduced", f"{w} is not cyclically reduced")
    d = EmbeddedDiagram(words, slots)
    validate(d)
    return d


def embed_pair(source: str) -> EmbeddedDiagram:
    """Validated diagram from a file path or the file's text."""
    if "\n" not in source and not source.lstrip().startswith("g2diagram"):
        with open(source) as fh:
            source = fh.read()
    return parse_diagram(source)


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    return any(all(a[(i + j) % n] == b[j] for j in range(n)) for i in range(n))


def reduced_pair(words) -> Tuple[str, ...]:
    return tuple(cyclic_reduce(text_of(w)) for w in words)
