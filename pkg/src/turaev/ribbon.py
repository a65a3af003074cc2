"""All-A and all-B ribbon graphs on the Turaev surface, and quasi-trees.

A ribbon graph here has one edge per crossing with darts ``2x`` and
``2x + 1`` (the two smoothing arcs of crossing ``x``) and a rotation giving
the cyclic order of darts around each vertex.  Faces are orbits of
``rotation o swap`` on the darts.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .diagram import A, B, Diagram, state_walks, all_state, s_a, s_b
from .errors import ConsistencyError, DiagramError
from .tait import TaitGraph, build_tait, edge_counts
from .trees import check_spanning_tree, delta_extremes


@dataclass(frozen=True)
class RibbonGraph:
    which: str
    rotation: tuple[tuple[int, ...], ...]  # darts around each vertex, in cyclic order

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        return {d: v for v, darts in enumerate(self.rotation) for d in darts}

    def _components(self, subset: frozenset[int]) -> int:
        parent = list(range(self.n_vertices))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        parts = self.n_vertices
        for x in subset:
            a, b = find(self.vertex_of[2 * x]), find(self.vertex_of[2 * x + 1])
            if a != b:
                parent[a] = b
                parts -= 1
        return parts

    def face_count(self, subset: Iterable[int] | None = None) -> int:
        """Boundary components of the ribbon subgraph on edges ``subset``."""
        edges = frozenset(range(self.n_edges) if subset is None else subset)
        nxt = {}
        n_faces = 0
        for darts in self.rotation:
            kept = [d for d in darts if d // 2 in edges]
            if not kept:
                n_faces += 1  # a bare vertex disk has one boundary circle
            for i, d in enumerate(kept):
                nxt[d] = kept[(i + 1) % len(kept)]
        seen = set()
        for start in nxt:
            if start in seen:
                continue
            n_faces += 1
            d = start
            while d not in seen:
                seen.add(d)
                d = nxt[d ^ 1]
        return n_faces

    def genus(self, subset: Iterable[int] | None = None) -> int:
        """Genus of the spanning ribbon subgraph on ``subset``; it must be connected."""
        edges = frozenset(range(self.n_edges) if subset is None else subset)
        if self._components(edges) != 1:
            raise DiagramError("ribbon subgraph is disconnected")
        twice = 2 - self.n_vertices + len(edges) - self.face_count(edges)
        if twice % 2 or twice < 0:
            raise ConsistencyError(f"non-integral ribbon genus {twice}/2")
        return twice // 2


def _orient_circles(diagram: Diagram) -> tuple[list, list, list[int], list[int]]:
    """Orient A- and B-circles so every arc is traversed oppositely by its two circles."""
    walks = {A: state_walks(diagram, all_state(diagram, A)),
             B: state_walks(diagram, all_state(diagram, B))}
    # label -> (circle, direction along the knot) for each state
    usage: dict[str, dict[int, tuple[int, int]]] = {A: {}, B: {}}
    for which in (A, B):
        for i, walk in enumerate(walks[which]):
            for step in walk:
                dart = 4 * step.crossing + step.leave
                usage[which][diagram.label(dart)] = (i, 1 if diagram.is_outgoing(dart) else -1)
    flips = {A: [0] * len(walks[A]), B: [0] * len(walks[B])}
    adj: dict[tuple[str, int], list[tuple[str, int, int]]] = {}
    for label, (ia, da) in usage[A].items():
        ib, db = usage[B][label]
        # want flipA*da == -flipB*db, i.e. flipB == -flipA*da*db
        rel = -da * db
        adj.setdefault((A, ia), []).append((B, ib, rel))
        adj.setdefault((B, ib), []).append((A, ia, rel))
    flips[A][0] = 1
    stack = [(A, 0)]
    while stack:
        which, i = stack.pop()
        for other, j, rel in adj.get((which, i), []):
            want = flips[which][i] * rel
            if flips[other][j] == 0:
                flips[other][j] = want
                stack.append((other, j))
            elif flips[other][j] != want:
                raise ConsistencyError("state circles admit no coherent orientation")
    return walks[A], walks[B], flips[A], flips[B]


def build_ribbon(diagram: Diagram, which: str) -> RibbonGraph:
    """Ribbon graph whose vertices are the ``which``-state circles.

    The rotation at a vertex is the order in which its circle meets the
    saddles, read in the boundary orientation that the Turaev surface
    induces on the capping disk.
    """
    walks_a, walks_b, flips_a, flips_b = _orient_circles(diagram)
    walks, flips = (walks_a, flips_a) if which == A else (walks_b, flips_b)
    rotation = []
    for walk, f in zip(walks, flips):
        darts = tuple(2 * step.crossing + step.arc for step in walk)
        rotation.append(darts if f > 0 else tuple(reversed(darts)))
    ribbon = RibbonGraph(which, tuple(rotation))
    dual_count = len(walks_b) if which == A else len(walks_a)
    if ribbon.face_count() != dual_count:
        raise ConsistencyError(
            f"{which}-ribbon graph has {ribbon.face_count()} faces, expected {dual_count}"
        )
    return ribbon


def ribbon_genus(ribbon: RibbonGraph, subset: Iterable[int] | None = None) -> int:
    return ribbon.genus(subset)


def quasi_map(graph: TaitGraph, tree: Iterable[int], which: str) -> frozenset[int]:
    """Edge set of the quasi-tree assigned to a spanning tree of ``G``.

    For ``which == A``: A-edges of the tree plus B-edges outside it;
    symmetrically for ``B``.
    """
    tree = frozenset(tree)
    check_spanning_tree(graph, tree)
    return frozenset(
        e.crossing for e in graph.edges if (e.ab == which) == (e.crossing in tree)
    )


def check_quasi_tree(ribbon: RibbonGraph, edges: Iterable[int]) -> None:
    edges = frozenset(edges)
    if ribbon._components(edges) != 1:
        raise ConsistencyError("quasi-tree image is disconnected")
    if ribbon.face_count(edges) != 1:
        raise ConsistencyError(f"quasi-tree image has {ribbon.face_count(edges)} faces")


def turaev_genus_diagram(diagram: Diagram, graph: TaitGraph | None = None) -> int:
    """Genus of the Turaev surface, by Euler characteristic and by delta-width."""
    twice = 2 - s_a(diagram) + diagram.c - s_b(diagram)
    if twice % 2 or twice < 0:
        raise ConsistencyError(f"Turaev surface Euler data gives genus {twice}/2")
    width = delta_extremes(diagram, graph).width
    if width != twice // 2:
        raise ConsistencyError(f"Euler genus {twice // 2} != delta width {width}")
    return width


def quasi_tree_genus_target(diagram: Diagram, graph: TaitGraph, which: str) -> int:
    """Right-hand side ``g(q(T)) + E_B(T)`` (A) or ``g(q(T)) + E_A(T)`` (B)."""
    g = edge_counts(graph)
    twice = g.V + (g.E_B - s_a(diagram) if which == A else g.E_A - s_b(diagram))
    if twice % 2:
        raise ConsistencyError("quasi-tree genus identity has odd right-hand side")
    return twice // 2


__all__ = [
    "RibbonGraph",
    "build_ribbon",
    "build_tait",
    "check_quasi_tree",
    "quasi_map",
    "quasi_tree_genus_target",
    "ribbon_genus",
    "turaev_genus_diagram",
]
