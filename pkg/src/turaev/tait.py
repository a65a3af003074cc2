"""Checkerboard colorings and the two Tait graphs of a diagram."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .diagram import A, B, Diagram, faces
from .errors import ConsistencyError


@dataclass(frozen=True)
class TaitEdge:
    crossing: int
    u: int
    v: int
    ab: str
    sign: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class TaitGraph:
    """Tait graph: vertices are the regions of one color, one edge per crossing.

    ``regions[i]`` is the face index (into :func:`turaev.diagram.faces`) of
    vertex ``i``.  Edges are sorted by crossing id.
    """

    regions: tuple[int, ...]
    edges: tuple[TaitEdge, ...]
    dual: bool = False

    @property
    def n_vertices(self) -> int:
        return len(self.regions)

    def edge(self, crossing: int) -> TaitEdge:
        e = self.edges[crossing]
        assert e.crossing == crossing
        return e

    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  v{i};" for i in range(self.n_vertices)]
        for e in self.edges:
            sign = "+" if e.sign > 0 else "-"
            lines.append(
                f'  v{e.u} -- v{e.v} [label="{e.crossing}", ab="{e.ab}", sign="{sign}"];'
            )
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class EdgeCounts:
    E_A: int
    E_B: int
    E_plus: int
    E_minus: int
    E_A_plus: int
    E_A_minus: int
    E_B_plus: int
    E_B_minus: int
    V: int

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


def checkerboard(diagram: Diagram) -> list[int]:
    """Two-color the faces; returns ``color[face]`` in {0, 1}.

    The face at corner 0 of crossing 0 gets color 0.  Faces meeting at
    adjacent corners of a crossing share an arc and get opposite colors.
    """
    face_list = faces(diagram)
    face_of = {}
    for f, corners in enumerate(face_list):
        for corner in corners:
            face_of[corner] = f
    color = [-1] * len(face_list)
    color[face_of[0]] = 0
    stack = [face_of[0]]
    while stack:
        f = stack.pop()
        for corner in face_list[f]:
            x, q = divmod(corner, 4)
            for nq in ((q + 1) % 4, (q + 3) % 4):
                g = face_of[4 * x + nq]
                if color[g] < 0:
                    color[g] = 1 - color[f]
                    stack.append(g)
                elif color[g] == color[f]:
                    raise ConsistencyError("face map is not 2-colorable")
    return color


def _tait_for_color(diagram: Diagram, color: list[int], black: int, dual: bool) -> TaitGraph:
    face_list = faces(diagram)
    face_of = {corner: f for f, corners in enumerate(face_list) for corner in corners}
    regions = tuple(f for f in range(len(face_list)) if color[f] == black)
    vertex = {f: i for i, f in enumerate(regions)}
    edges = []
    for x, sign in enumerate(diagram.signs):
        f0, f1, f2, f3 = (face_of[4 * x + q] for q in range(4))
        if color[f1] == black:
            # corners 1 and 3 are cut apart by the A-smoothing
            edges.append(TaitEdge(x, vertex[f1], vertex[f3], A, sign))
        else:
            edges.append(TaitEdge(x, vertex[f0], vertex[f2], B, sign))
    return TaitGraph(regions, tuple(edges), dual)


def build_tait(diagram: Diagram) -> tuple[TaitGraph, TaitGraph]:
    """Return ``(G, G*)`` with ``E_B(G) >= E_B(G*)``.

    Ties go to the coloring that makes the face at corner 0 of crossing 0
    black.
    """
    color = checkerboard(diagram)
    g0 = _tait_for_color(diagram, color, 0, False)
    g1 = _tait_for_color(diagram, color, 1, False)
    eb0 = sum(1 for e in g0.edges if e.ab == B)
    eb1 = sum(1 for e in g1.edges if e.ab == B)
    if eb1 > eb0:
        g, gstar = g1, g0
    else:
        g, gstar = g0, g1
    return g, TaitGraph(gstar.regions, gstar.edges, True)


def edge_counts(graph: TaitGraph, subset: Iterable[int] | None = None, n_vertices: int | None = None) -> EdgeCounts:
    """Edge statistics of the subgraph on crossing ids ``subset`` (all edges if None).

    ``V`` defaults to the vertex count of ``graph``; spanning subgraphs share it.
    """
    ids = range(len(graph.edges)) if subset is None else subset
    counts = {(ab, s): 0 for ab in (A, B) for s in (1, -1)}
    for i in ids:
        e = graph.edges[i]
        counts[e.ab, e.sign] += 1
    ap, am, bp, bm = counts[A, 1], counts[A, -1], counts[B, 1], counts[B, -1]
    return EdgeCounts(
        E_A=ap + am,
        E_B=bp + bm,
        E_plus=ap + bp,
        E_minus=am + bm,
        E_A_plus=ap,
        E_A_minus=am,
        E_B_plus=bp,
        E_B_minus=bm,
        V=graph.n_vertices if n_vertices is None else n_vertices,
    )


def is_alternating(graph: TaitGraph) -> bool:
    """True iff every edge of ``G`` (built with the E_B convention) is a B-edge."""
    if graph.dual:
        return all(e.ab == A for e in graph.edges)
    return all(e.ab == B for e in graph.edges)
