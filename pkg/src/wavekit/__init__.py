"""Waves, meridians and tunnel depth for curves on a genus-two handlebody."""

from .word_core import (
    CyclicWord, AbelianImage, parse_word, reduce, invert, rotate, canonical_form,
    abelianize, proper_power_root, ROTATION, UNORIENTED, FULL,
)
from .fatgraph import (
    EmbeddedDiagram, embed_single_word, embed_words, embed_pair, derive_graph,
    faces, format_diagram, parse_diagram,
)
from .reduction import (
    BasisMove, apply_move, whitehead_minimize, minimal_orbit, cmz_is_primitive,
    is_primitive_or_proper_power, is_positive_curve, classify_bandsum,
)
from .waves import (
    Wave, MeridianPair, find_waves, distinguished_wave, surgery,
    distinguished_meridian_pair, vertical_slope_pair,
)
from .recognition import (
    FillingHomology, RecognitionResult, homology_of_filling, recognize_closed,
    recognize_words, embeds_in_family, is_11_tunnel, canonical_constituents,
)
from .depth import (
    DepthResult, UnknottingGraph, depth, shortest_meridian, build_unknotting_graph,
    min_path_lengths,
)

__all__ = [
    "CyclicWord",
    "AbelianImage",
    "parse_word",
    "reduce",
    "invert",
    "rotate",
    "canonical_form",
    "abelianize",
    "proper_power_root",
    "ROTATION",
    "UNORIENTED",
    "FULL",
    "EmbeddedDiagram",
    "embed_single_word",
    "embed_words",
    "embed_pair",
    "derive_graph",
    "faces",
    "format_diagram",
    "parse_diagram",
    "BasisMove",
    "apply_move",
    "whitehead_minimize",
    "minimal_orbit",
    "cmz_is_primitive",
    "is_primitive_or_proper_power",
    "is_positive_curve",
    "classify_bandsum",
    "Wave",
    "MeridianPair",
    "find_waves",
    "distinguished_wave",
    "surgery",
    "distinguished_meridian_pair",
    "vertical_slope_pair",
    "FillingHomology",
    "RecognitionResult",
    "homology_of_filling",
    "recognize_closed",
    "recognize_words",
    "embeds_in_family",
    "is_11_tunnel",
    "canonical_constituents",
    "DepthResult",
    "UnknottingGraph",
    "depth",
    "shortest_meridian",
    "build_unknotting_graph",
    "min_path_lengths",
]

__version__ = "0.1.0"
