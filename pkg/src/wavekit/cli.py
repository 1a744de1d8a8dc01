"""Command-line interface.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
Results go to stdout; diagnostics (``--verbose``) go to stderr.

``--json`` output, for every subcommand, is one object::

    {"command": <name>, "ok": true, "result": {...}}
    {"command": <name>, "ok": false, "error": {"name": <ErrorClass>, "message": <text>}}

``survey --json`` prints one such object with ``result.rows`` holding the
rows in input order.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List, Optional

from .depth import build_unknotting_graph, depth, min_path_lengths, to_dot
from .fatgraph import embed_pair
from .recognition import (
    embeds_in_family, homology_of_filling, recognize_closed, recognize_words,
)
from .reduction import (
    apply_trace, cmz_is_primitive, format_trace, invert_trace, is_positive_curve,
    is_primitive_or_proper_power, whitehead_minimize,
)
from .waves import distinguished_meridian_pair, vertical_slope_pair
from .word_core import UNORIENTED, canonical, cyclic_reduce, parse_word

log = logging.getLogger("wavekit")

TSV_COLUMNS = (
    "word", "minimal_length", "positive", "meridians", "homology",
    "primitive", "verdict", "depth", "error",
)


class UsageError(Exception):
    pass


def _word(text: str) -> str:
    return parse_word(text.strip()).text


def _show(w: str, raw: bool) -> str:
    return w if raw else canonical(w, UNORIENTED)


def _meridian_words(mp, raw: bool, minimal: bool = False) -> List[str]:
    """Meridians in the input word's basis, or in the minimal basis."""
    if minimal:
        return list(mp.oriented) if raw else list(mp.words)
    back = invert_trace(mp.trace)
    return [_show(cyclic_reduce(apply_trace(x, back)), raw) for x in mp.words]


# ---------------------------------------------------------------------------
# subcommands; each returns (json-able result, human text)

def cmd_analyze(args):
    w = _word(args.word)
    m, trace = whitehead_minimize(w)
    prim = is_primitive_or_proper_power(w)
    res = {
        "word": _show(w, args.raw),
        "minimal": m.text,
        "minimal_length": len(m.text),
        "trace": format_trace(trace),
        "class": prim.kind,
    }
    if not prim.terminal:
        res["positive"] = is_positive_curve(w)
        mp = distinguished_meridian_pair(w)
        res["meridians"] = _meridian_words(mp, args.raw)
        res["minimal_meridians"] = list(mp.words)
        res["homology"] = [str(homology_of_filling(mp.base, x)) for x in mp.words]
        fam = embeds_in_family(w)
        res["verdict"] = str(fam)
        if fam.verdict != "DoesNotEmbed":
            res["depth"] = depth(w, check=False).depth
    lines = [f"{k} {' '.join(map(str, v)) if isinstance(v, list) else v}" for k, v in res.items()]
    return res, "\n".join(lines)


def cmd_meridians(args):
    w = _word(args.word)
    mp = vertical_slope_pair(w) if args.vertical else distinguished_meridian_pair(w)
    words = _meridian_words(mp, args.raw, args.minimal)
    homs = [str(homology_of_filling(mp.base, x)) for x in mp.words]
    res = {"word": w, "basis_word": mp.base, "meridians": words,
           "minimal_meridians": list(mp.words), "homology": homs,
           "trace": format_trace(mp.trace)}
    lines = [" ".join(words)] + [f"H1 {x}: {h}" for x, h in zip(words, homs)]
    if args.minimal:
        lines.insert(0, f"basis {mp.base}")
    if args.trace:
        lines.append(f"trace {format_trace(mp.trace) or '-'}")
    return res, "\n".join(lines)


def cmd_recognize(args):
    if args.words:
        r = recognize_words(*(_word(x) for x in args.words))
    elif args.diagram:
        r = recognize_closed(embed_pair(args.diagram))
    else:
        raise UsageError("recognize needs a diagram file or --words W1 W2")
    res = {"verdict": r.verdict, "p": r.p, "reason": r.reason,
           "homology": str(r.homology) if r.homology else None,
           "trace": [list(p) for p in r.trace]}
    lines = [str(r)]
    if args.trace:
        lines += [f"  {a} {b}" for a, b in r.trace]
    return res, "\n".join(lines)


def cmd_depth(args):
    r = depth(_word(args.word))
    res = {"depth": r.depth, "path": r.path, "pairs": [list(p) for p in r.pairs]}
    return res, f"depth {r.depth}\npath {' -> '.join(r.path)}"


def cmd_graph(args):
    g = build_unknotting_graph(_word(args.word))
    if args.dot:
        return None, to_dot(g).rstrip("\n")
    L = min_path_lengths(g)
    res = {
        "initial": g.initial,
        "vertices": [{"word": v, "terminal": t, "L": L.get(v)} for v, t in g.vertices.items()],
        "edges": [{"from": e.src, "to": e.dst, "kind": e.kind, "gstar": e.in_gstar} for e in g.edges],
        "path": g.path,
    }
    lines = [f"vertex {v['word']} L={v['L']}{' terminal' if v['terminal'] else ''}" for v in res["vertices"]]
    lines += [f"edge {e['from']} -> {e['to']} {e['kind']}{' G*' if e['gstar'] else ''}" for e in res["edges"]]
    return res, "\n".join(lines)


# ---------------------------------------------------------------------------
# survey

@dataclass
class SurveyRow:
    word: str
    minimal_length: Optional[int] = None
    positive: Optional[bool] = None
    meridians: List[str] = field(default_factory=list)
    homology: List[str] = field(default_factory=list)
    primitive: List[bool] = field(default_factory=list)
    verdict: str = ""
    depth: Optional[int] = None
    error: str = ""

    def tsv(self) -> str:
        def cell(v):
            if v is None:
                return "n/a"
            if isinstance(v, bool):
                return "yes" if v else "no"
            if isinstance(v, list):
                return ",".join(cell(x) for x in v)
            return str(v)
        return "\t".join(cell(getattr(self, c)) for c in TSV_COLUMNS)


def survey_row(text: str) -> SurveyRow:
    row = SurveyRow(text.strip())
    try:
        w = _word(text)
        row.word = w
        m, _ = whitehead_minimize(w)
        row.minimal_length = len(m.text)
        if is_primitive_or_proper_power(w).terminal:
            row.verdict = "PrimitiveOrPower"
            row.depth = 0
            return row
        row.positive = is_positive_curve(w)
        mp = distinguished_meridian_pair(w)
        row.meridians = _meridian_words(mp, False)
        row.homology = [str(homology_of_filling(mp.base, x)) for x in mp.words]
        row.primitive = [cmz_is_primitive(x) for x in mp.words]
        fam = embeds_in_family(w)
        row.verdict = str(fam)
        if fam.verdict != "DoesNotEmbed":
            row.depth = depth(w, check=False).depth
    except Exception as e:  # one bad row must not stop the survey
        row.error = f"{type(e).__name__}: {e}"
        row.verdict = ""
    return row


def _read_lines(path: str) -> List[str]:
    with open(path) as fh:
        out = []
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
        return out


def cmd_survey(args):
    lines = _read_lines(args.file)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(survey_row, lines))
    else:
        rows = [survey_row(x) for x in lines]
    res = {"columns": list(TSV_COLUMNS), "rows": [asdict(r) for r in rows]}
    text = "\n".join(["\t".join(TSV_COLUMNS)] + [r.tsv() for r in rows])
    return res, text


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--raw", action="store_true", help="print words as computed, not canonicalised")
    common.add_argument("--verbose", "-v", action="store_true", help="diagnostics on stderr")

    p = argparse.ArgumentParser(prog="wavekit", description="Waves and meridians of curves on a genus-two handlebody.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="summary of one curve")
    s.add_argument("word")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("meridians", parents=[common], help="distinguished meridian pair")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true", help="print the basis moves used")
    s.add_argument("--minimal", action="store_true", help="words in the minimal basis, not the input's")
    s.add_argument("--vertical", action="store_true", help="use the vertical wave of a positive diagram")
    s.set_defaults(func=cmd_meridians)

    s = sub.add_parser("recognize", parents=[common], help="recognise the closed manifold of a two-curve diagram")
    s.add_argument("diagram", nargs="?", help="diagram file, '-' for stdin")
    s.add_argument("--words", nargs=2, metavar=("W1", "W2"))
    s.add_argument("--trace", action="store_true", help="list the pairs visited")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("depth", parents=[common], help="depth and unknotting path")
    s.add_argument("word")
    s.set_defaults(func=cmd_depth)

    s = sub.add_parser("graph", parents=[common], help="unknotting graph")
    s.add_argument("word")
    s.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("survey", parents=[common], help="batch report over a word file")
    s.add_argument("file")
    s.add_argument("--tsv", action="store_true", help="tab-separated rows (default)")
    s.add_argument("--jobs", type=int, default=1, metavar="N")
    s.set_defaults(func=cmd_survey)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if args.command == "survey" and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    if args.command == "recognize" and args.diagram and args.diagram == "-":
        args.diagram = sys.stdin.read()
    try:
        res, text = args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except Exception as e:
        name = type(e).__name__
        if args.json:
            print(json.dumps({"command": args.command, "ok": False,
                              "error": {"name": name, "message": str(e)}}, sort_keys=True))
        print(f"error: {name}: {e}", file=sys.stderr)
        return 1
    if args.json and res is not None:
        print(json.dumps({"command": args.command, "ok": True, "result": res}, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
