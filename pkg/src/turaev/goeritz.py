"""Goeritz matrices and knot signature by exact congruence diagonalization."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .diagram import A, B, Diagram, faces, s_a, s_b, splice
from .errors import ConsistencyError, DiagramError
from .tait import TaitGraph, build_tait, checkerboard, edge_counts, is_alternating


@dataclass(frozen=True)
class GoeritzData:
    matrix: tuple[tuple[int, ...], ...]
    mu: int
    deleted_vertex: int


@dataclass(frozen=True)
class MatrixSignature:
    sigma_plus: int
    sigma_minus: int
    sigma_zero: int

    @property
    def signature(self) -> int:
        return self.sigma_plus - self.sigma_minus


def goeritz_matrix(graph: TaitGraph, deleted: int = 0) -> GoeritzData:
    """Goeritz matrix of a loop-free Tait graph with row/column ``deleted`` removed.

    Off-diagonal entries count B-edges minus A-edges between two vertices;
    diagonal entries make every full row sum to zero.
    """
    if graph.has_loops():
        raise DiagramError("Tait graph has a loop edge; reduce nugatory crossings first")
    n = graph.n_vertices
    if not 0 <= deleted < n:
        raise DiagramError(f"vertex {deleted} not in 0..{n - 1}")
    full = [[0] * n for _ in range(n)]
    for e in graph.edges:
        w = 1 if e.ab == B else -1
        full[e.u][e.v] += w
        full[e.v][e.u] += w
    for i in range(n):
        full[i][i] = -sum(full[i][j] for j in range(n) if j != i)
    keep = [i for i in range(n) if i != deleted]
    matrix = tuple(tuple(full[i][j] for j in keep) for i in keep)
    g = edge_counts(graph)
    return GoeritzData(matrix, g.E_A_plus - g.E_B_minus, deleted)


def matrix_signature(matrix: Sequence[Sequence[int]]) -> MatrixSignature:
    """Inertia of a symmetric integer matrix by symmetric Gaussian elimination over Q."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m) or any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise ValueError("matrix is not symmetric")
    plus = minus = zero = 0
    active = list(range(n))
    while active:
        k = active[0]
        if m[k][k] == 0:
            j = next((j for j in active[1:] if m[j][j] != 0), None)
            if j is not None:
                k = j
            else:
                j = next((j for j in active[1:] if m[k][j] != 0), None)
                if j is None:
                    zero += 1
                    active.remove(k)
                    continue
                # add row/column j to k: new pivot 2*m[k][j] since m[j][j] == 0
                for i in range(n):
                    m[k][i] += m[j][i]
                for i in range(n):
                    m[i][k] += m[i][j]
        pivot = m[k][k]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        active.remove(k)
        for i in active:
            factor = m[i][k] / pivot
            if factor:
                for j in active:
                    m[i][j] -= factor * m[k][j]
        for i in active:
            m[i][k] = m[k][i] = Fraction(0)
    return MatrixSignature(plus, minus, zero)


def goeritz_signature(graph: TaitGraph, deleted: int = 0) -> int:
    """``sigma(G) - mu(D)`` for a loop-free Tait graph of a knot diagram."""
    data = goeritz_matrix(graph, deleted)
    sig = matrix_signature(data.matrix)
    if sig.sigma_zero:
        raise DiagramError("Goeritz matrix is singular; the diagram is not a knot")
    return sig.signature - data.mu


def knot_signature(diagram: Diagram, deleted: int = 0) -> int:
    """Signature of a knot from a diagram whose Tait graph G has no loops."""
    graph, _ = build_tait(diagram)
    return goeritz_signature(graph, deleted)


def traczyk_signature(diagram: Diagram) -> int:
    """Signature of a reduced alternating diagram from its all-A and all-B states."""
    graph, dual = build_tait(diagram)
    if not is_alternating(graph):
        raise DiagramError("diagram is not alternating")
    if graph.has_loops() or dual.has_loops():
        raise DiagramError("diagram is not reduced")
    first = s_a(diagram) - diagram.n_plus - 1
    second = 1 + diagram.n_minus - s_b(diagram)
    if first != second:
        raise ConsistencyError(f"Traczyk expressions disagree: {first} != {second}")
    return first


def nugatory_crossings(diagram: Diagram) -> list[int]:
    """Crossings whose two opposite corners of one color lie in the same face."""
    face_of = {corner: f for f, corners in enumerate(faces(diagram)) for corner in corners}
    return [
        x for x in range(diagram.c)
        if face_of[4 * x] == face_of[4 * x + 2] or face_of[4 * x + 1] == face_of[4 * x + 3]
    ]


def r1_reduce(diagram: Diagram) -> Diagram:
    """Remove nugatory crossings (loops in G or G*) one at a time until none remain.

    Each removal reconnects the crossing so that its two distinct faces merge;
    for a Reidemeister I kink this deletes the monogon.  Raises
    :class:`turaev.diagram.UnknotDiagram` if no crossing survives.
    """
    while True:
        bad = nugatory_crossings(diagram)
        if not bad:
            return diagram
        x = bad[0]
        face_of = {corner: f for f, corners in enumerate(faces(diagram)) for corner in corners}
        j = 0 if face_of[4 * x] == face_of[4 * x + 2] else 1
        diagram = splice(diagram, x, ((j, j + 1), (j + 2, (j + 3) % 4)))


def signature(diagram: Diagram) -> tuple[int, list[str]]:
    """Knot signature of any diagram, reducing nugatory crossings first.

    Returns the value and any warnings raised on the way.
    """
    from .diagram import UnknotDiagram

    warnings = []
    try:
        reduced = r1_reduce(diagram)
    except UnknotDiagram:
        return 0, [f"removed all {diagram.c} nugatory crossings; signature of the unknot"]
    if reduced.c != diagram.c:
        warnings.append(f"removed {diagram.c - reduced.c} nugatory crossing(s) before the Goeritz step")
    return knot_signature(reduced), warnings
