"""Spanning trees of Tait graphs and their delta-gradings.

Every grading is stored doubled (``2 * delta``) as an exact integer.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import sympy

from .diagram import A, B, Diagram, s_a, s_b
from .errors import ConsistencyError, DiagramError, TreeCapExceeded
from .tait import TaitGraph, build_tait, edge_counts

DEFAULT_CAP = 10**6

SpanningTree = frozenset  # of crossing ids


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        self.parent[ri] = rj
        return True


def _connected(n: int, edges: list[tuple[int, int, int]]) -> bool:
    dsu = _DSU(n)
    parts = n
    for _, u, v in edges:
        if dsu.union(u, v):
            parts -= 1
    return parts == 1


def _trees(n: int, edges: list[tuple[int, int, int]], chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # contraction/deletion on the lowest remaining edge id
    if n == 1:
        yield chosen
        return
    edges = [e for e in edges if e[1] != e[2]]
    if not edges:
        return
    (eid, u, v), rest = edges[0], edges[1:]
    bridge = not _connected(n, rest)
    # contract v into u, then renumber vertices above v down by one
    def merge(w: int) -> int:
        w = u if w == v else w
        return w - 1 if w > v else w

    contracted = [(i, merge(a), merge(b)) for i, a, b in rest]
    yield from _trees(n - 1, contracted, chosen + (eid,))
    if not bridge:
        yield from _trees(n, rest, chosen)


def enumerate_spanning_trees(graph: TaitGraph, cap: int = DEFAULT_CAP) -> Iterator[SpanningTree]:
    """Yield every spanning tree once; raise :class:`TreeCapExceeded` past ``cap``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    edges = [(e.crossing, e.u, e.v) for e in graph.edges]
    if not _connected(graph.n_vertices, edges):
        raise DiagramError("Tait graph is disconnected")
    for count, tree in enumerate(_trees(graph.n_vertices, edges, ()), start=1):
        if count > cap:
            raise TreeCapExceeded(cap)
        yield frozenset(tree)


def kirchhoff_tree_count(graph: TaitGraph) -> int:
    """Number of spanning trees by the matrix-tree theorem (exact determinant)."""
    n = graph.n_vertices
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for e in graph.edges:
        if e.is_loop:
            continue
        lap[e.u][e.u] += 1
        lap[e.v][e.v] += 1
        lap[e.u][e.v] -= 1
        lap[e.v][e.u] -= 1
    minor = sympy.Matrix([row[1:] for row in lap[1:]])
    return int(minor.det(method="bareiss"))


def check_spanning_tree(graph: TaitGraph, tree: Iterable[int]) -> None:
    tree = list(tree)
    if len(tree) != graph.n_vertices - 1:
        raise DiagramError(f"{len(tree)} edges cannot span {graph.n_vertices} vertices")
    dsu = _DSU(graph.n_vertices)
    for i in tree:
        e = graph.edges[i]
        if not dsu.union(e.u, e.v):
            raise DiagramError(f"edge {i} closes a cycle")


# -- gradings -----------------------------------------------------------------


def delta_kh(graph: TaitGraph, tree: Iterable[int], variant: str = "eq1") -> int:
    """Doubled reduced-Khovanov delta-grading of a spanning tree.

    ``variant`` picks one of three equal formulas: ``"base"``, ``"eq1"``
    (uses E^+(G) - E_B(G)) or ``"eq2"`` (uses E_A(G) - E^-(G)).
    """
    tree = frozenset(tree)
    check_spanning_tree(graph, tree)
    t = edge_counts(graph, tree)
    g = edge_counts(graph)
    if variant == "base":
        quadruple = 4 * t.E_B + g.E_plus - g.E_minus - g.E_B + g.E_A - 2 * (g.V - 1)
        if quadruple % 2:
            raise ConsistencyError("4*delta is odd")
        return quadruple // 2
    if variant == "eq1":
        return t.E_B - t.E_A + g.E_plus - g.E_B
    if variant == "eq2":
        return t.E_B - t.E_A - g.E_minus + g.E_A
    raise ValueError(f"unknown variant {variant!r}")


def delta_hfk(graph: TaitGraph, tree: Iterable[int]) -> int:
    """Doubled knot Floer delta-grading of a spanning tree."""
    tree = frozenset(tree)
    check_spanning_tree(graph, tree)
    t = edge_counts(graph, tree)
    rest = edge_counts(graph, [i for i in range(len(graph.edges)) if i not in tree])
    return t.E_B_plus + rest.E_A_plus - t.E_A_minus - rest.E_B_minus


@dataclass(frozen=True)
class DeltaStats:
    """Doubled extremes of the delta-grading, optionally with a histogram."""

    two_delta_min: int
    two_delta_max: int
    tree_count: int | None = None
    histogram: dict[int, int] | None = field(default=None, compare=False)

    @property
    def width(self) -> int:
        """delta_max - delta_min."""
        diff = self.two_delta_max - self.two_delta_min
        if diff % 2:
            raise ConsistencyError("delta_max - delta_min is not an integer")
        return diff // 2


def extreme_tree(graph: TaitGraph, prefer: str) -> SpanningTree:
    """Greedy spanning tree using as many ``prefer``-labelled edges as possible."""
    order = sorted(graph.edges, key=lambda e: (e.ab != prefer, e.crossing))
    dsu = _DSU(graph.n_vertices)
    tree = frozenset(e.crossing for e in order if dsu.union(e.u, e.v))
    if len(tree) != graph.n_vertices - 1:
        raise DiagramError("Tait graph is disconnected")
    return tree


def closed_form_extremes(diagram: Diagram, graph: TaitGraph) -> tuple[int, int]:
    """``(2 delta_min, 2 delta_max)`` from state-circle counts alone."""
    g = edge_counts(graph)
    return s_b(diagram) - g.E_minus - 1, 1 + g.E_plus - s_a(diagram)


def delta_extremes(diagram: Diagram, graph: TaitGraph | None = None) -> DeltaStats:
    """Extremes by matroid greedy, cross-checked against the closed forms."""
    if graph is None:
        graph = build_tait(diagram)[0]
    lo = delta_kh(graph, extreme_tree(graph, A))
    hi = delta_kh(graph, extreme_tree(graph, B))
    if (lo, hi) != closed_form_extremes(diagram, graph):
        raise ConsistencyError(
            f"greedy extremes {(lo, hi)} != closed forms {closed_form_extremes(diagram, graph)}"
        )
    return DeltaStats(lo, hi)


def delta_distribution(graph: TaitGraph, cap: int = DEFAULT_CAP) -> DeltaStats:
    """Histogram of ``2 delta`` over all spanning trees."""
    hist: Counter[int] = Counter()
    g = edge_counts(graph)
    shift = g.E_plus - g.E_B
    for tree in enumerate_spanning_trees(graph, cap):
        n_b = sum(1 for i in tree if graph.edges[i].ab == B)
        hist[n_b - (len(tree) - n_b) + shift] += 1
    return DeltaStats(min(hist), max(hist), sum(hist.values()), dict(sorted(hist.items())))
