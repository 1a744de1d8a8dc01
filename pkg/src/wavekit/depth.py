"""Depth of an unknotting tunnel and the unknotting graphs G and G*.

All curves live in one fixed basis, the basis of the input word.  Each
step minimises the current curve, performs surgery in the minimal basis
and carries the two meridians back.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .fatgraph import derive_graph, embed_words, is_connected, NotRealizable
from .reduction import apply_trace, invert_trace, is_primitive_or_proper_power, minimize_words
from .recognition import DOES_NOT_EMBED, distinguished_in_pair, embeds_in_family, find_waves
from .waves import MeridianPair, WaveError, distinguished_meridian_pair
from .word_core import UNORIENTED, canonical, cyclic_reduce, sort_key, text_of

MAX_VERTICES = 10 ** 4


class DepthError(Exception):
    pass


class NotInFamily(DepthError):
    pass


class BothPrimitiveOrPower(DepthError):
    pass


class GraphTooLarge(DepthError):
    pass


def vertex_key(s: str) -> str:
    return canonical(cyclic_reduce(s), UNORIENTED)


@dataclass
class DepthResult:
    depth: int
    path: List[str]
    pairs: List[Tuple[str, str]] = field(default_factory=list)


def meridians_in_basis(w: str) -> Tuple[MeridianPair, Tuple[str, str]]:
    """Distinguished pair of ``w`` and its words carried back to w's basis."""
    mp = distinguished_meridian_pair(w)
    back = invert_trace(mp.trace)
    return mp, tuple(vertex_key(apply_trace(m, back)) for m in mp.words)


def shortest_meridian(pair: MeridianPair) -> int:
    """Index (0 or 1) of the member the pair's distinguished wave is not based at."""
    words = pair.words
    flags = [is_primitive_or_proper_power(w).terminal for w in words]
    if all(flags):
        raise BothPrimitiveOrPower(f"{words[0]} and {words[1]}")
    mins, moves = minimize_words(words)
    try:
        # the surgery diagram is the pair as drawn; use it when no basis
        # change is needed
        d = pair.diagram.restrict([0, 1]) if not moves else embed_words(mins, "pair")
    except NotRealizable as e:
        raise DepthError(str(e)) from None
    if derive_graph(d).form == "FormIII":
        raise DepthError(f"pair {mins} has no connected cut-vertex-free diagram")
    for c in (0, 1):
        pw = distinguished_in_pair(mins, c, d)
        if pw is None:
            continue
        if any(v.key() == pw.key for v in find_waves(d, c)):
            return 1 - c
    raise WaveError(f"no distinguished wave of {mins} is disjoint from the other curve")


def _check_family(w: str):
    fam = embeds_in_family(w)
    if fam.verdict == DOES_NOT_EMBED:
        raise NotInFamily(f"{w}: {fam.recognition}")
    return fam


def depth(w, check: bool = True) -> DepthResult:
    R = cyclic_reduce(text_of(w))
    if not R:
        raise DepthError("trivial word")
    if is_primitive_or_proper_power(R).terminal:
        return DepthResult(0, [vertex_key(R)])
    if check:
        _check_family(R)
    path = [vertex_key(R)]
    pairs = []
    n = 0
    while not is_primitive_or_proper_power(R).terminal:
        mp, back = meridians_in_basis(R)
        pairs.append(back)
        if not is_connected(derive_graph(mp.diagram)) or all(
                is_primitive_or_proper_power(m).terminal for m in mp.words):
            pick = 0 if sort_key(mp.m1) <= sort_key(mp.m2) else 1
        else:
            pick = shortest_meridian(mp)
        R = back[pick]
        path.append(R)
        n += 1
        if n > MAX_VERTICES:
            raise DepthError("depth procedure did not terminate")
    return DepthResult(n, path, pairs)


# ---------------------------------------------------------------------------
# unknotting graphs

@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    kind: str  # distinguished_child | cross_link
    in_gstar: bool = False


@dataclass
class UnknottingGraph:
    initial: str
    vertices: Dict[str, bool]  # word -> primitive_or_power
    edges: List[Edge]
    path: List[str] = field(default_factory=list)

    def children(self, v: str, kinds=("distinguished_child",)) -> List[str]:
        return [e.dst for e in self.edges if e.src == v and e.kind in kinds]

    @property
    def terminals(self) -> List[str]:
        return [v for v, t in self.vertices.items() if t]

    def gstar_vertices(self) -> List[str]:
        out = {self.initial}
        for e in self.edges:
            if e.in_gstar:
                out.update((e.src, e.dst))
        return sorted(out, key=sort_key)


def build_unknotting_graph(w, check: bool = True) -> UnknottingGraph:
    R = vertex_key(text_of(w))
    if check and not is_primitive_or_proper_power(R).terminal:
        _check_family(R)
    verts: Dict[str, bool] = {R: is_primitive_or_proper_power(R).terminal}
    edges: List[Edge] = []
    kids: Dict[str, Tuple[str, str]] = {}
    queue = deque([R])
    while queue:
        v = queue.popleft()
        if verts[v]:
            continue
        _, pair = meridians_in_basis(v)
        kids[v] = pair
        for m in pair:
            if m not in verts:
                if len(verts) >= MAX_VERTICES:
                    raise GraphTooLarge(f"more than {MAX_VERTICES} vertices")
                verts[m] = is_primitive_or_proper_power(m).terminal
                queue.append(m)
            edges.append(Edge(v, m, "distinguished_child"))
    res = depth(R, check=False)
    on_path = set(res.path[:-1])
    gstar_edges = []
    for e in edges:
        gstar_edges.append(Edge(e.src, e.dst, e.kind, e.src in on_path))
    # cross links V_{i,2} -> V_{i,1}
    for i, Ri in enumerate(res.path[:-1]):
        nxt = res.path[i + 1]
        other = [m for m in kids[Ri] if m != nxt]
        if other and not verts[other[0]]:
            gstar_edges.append(Edge(other[0], nxt, "cross_link", True))
    return UnknottingGraph(R, verts, gstar_edges, res.path)


def min_path_lengths(g: UnknottingGraph, kinds=("distinguished_child",)) -> Dict[str, int]:
    dist = {g.initial: 0}
    queue = deque([g.initial])
    while queue:
        v = queue.popleft()
        for u in g.children(v, kinds):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def graph_depth(g: UnknottingGraph) -> int:
    L = min_path_lengths(g)
    return min(L[v] for v in g.terminals if v in L)


def cross_links_never_shorten(g: UnknottingGraph) -> bool:
    L = min_path_lengths(g)
    L2 = min_path_lengths(g, ("distinguished_child", "cross_link"))
    return all(L2.get(v) == L.get(v) for v in g.terminals)


def sibling_lemma_holds(g: UnknottingGraph) -> bool:
    """Along the depth path A, B, C with B' and C' the other children of A
    and B: L(B) = L(B') forces L(C) = L(C')."""
    L = min_path_lengths(g)
    P = g.path
    for a, b, c in zip(P, P[1:], P[2:]):
        bp = [m for m in g.children(a) if m != b]
        cp = [m for m in g.children(b) if m != c]
        if not bp or not cp:
            continue
        if L.get(b) == L.get(bp[0]) and L.get(c) != L.get(cp[0]):
            return False
    return True


def to_dot(g: UnknottingGraph) -> str:
    names = {v: f"v{i}" for i, v in enumerate(sorted(g.vertices, key=sort_key))}
    lines = ["digraph G {"]
    for v in sorted(g.vertices, key=sort_key):
        shape = "box" if g.vertices[v] else "ellipse"
        extra = ", penwidth=2" if v == g.initial else ""
        lines.append(f'  {names[v]} [label="{v}", shape={shape}{extra}];')
    for e in g.edges:
        style = "dashed" if e.kind == "cross_link" else ("solid" if e.in_gstar else "dotted")
        lines.append(f"  {names[e.src]} -> {names[e.dst]} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
