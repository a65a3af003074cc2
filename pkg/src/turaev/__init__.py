"""Tait graphs, spanning-tree gradings, Turaev genus and signature bounds for knot diagrams."""

from .bounds import ConcordanceInterval, TuraevLowerBound, concordance_interval, turaev_lower_bound, unknotting_lower_bound
from .diagram import A, B, BraidWord, Diagram, braid_closure, faces, mirror, parse_braid, parse_pd, s_a, s_b, state_circles
from .errors import ConsistencyError, DiagramError, TreeCapExceeded
from .goeritz import goeritz_matrix, knot_signature, matrix_signature, r1_reduce, signature, traczyk_signature
from .report import InvariantReport, analyze
from .ribbon import build_ribbon, quasi_map, turaev_genus_diagram
from .tait import TaitGraph, build_tait, edge_counts, is_alternating
from .trees import delta_distribution, delta_extremes, delta_hfk, delta_kh, enumerate_spanning_trees

__version__ = "0.1.0"
