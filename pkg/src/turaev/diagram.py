"""Oriented knot diagrams encoded as planar-diagram (PD) codes.

A crossing ``X(a, b, c, d)`` lists four strand labels in cyclic order around
the crossing, starting at the incoming under-strand, so positions 0 and 2
carry the under-strand and positions 1 and 3 the over-strand.  Labels run
``1..2c`` consecutively along the orientation of the knot.

Darts and corners are encoded as integers ``4 * crossing + position``.
Corner ``q`` of a crossing is the angle between positions ``q`` and ``q + 1``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ConsistencyError, DiagramError

A = "A"
B = "B"

# Position pairings of the two smoothings.  With the sign rule below the
# A-smoothing is the oriented resolution of a positive crossing.
SMOOTHING: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    A: ((0, 3), (1, 2)),
    B: ((0, 1), (2, 3)),
}

Quad = tuple[int, int, int, int]


class UnknotDiagram(DiagramError):
    """An operation produced (or was given) the crossingless unknot."""


def _succ(label: int, n_labels: int) -> int:
    return label % n_labels + 1


def _crossing_sign(i: int, quad: Quad, n_labels: int) -> int:
    a, b, c, d = quad
    if c != _succ(a, n_labels):
        raise DiagramError(
            f"crossing {i} X{quad}: under-strand must leave as {_succ(a, n_labels)}, got {c}"
        )
    forward = d == _succ(b, n_labels)
    backward = b == _succ(d, n_labels)
    if forward and backward:
        # Only possible with two labels: the over-strand enters on the
        # under-strand's outgoing label.
        return 1 if b == c else -1
    if forward:
        return 1
    if backward:
        return -1
    raise DiagramError(f"crossing {i} X{quad}: over-strand labels {b},{d} are not consecutive")


def _trace_faces(crossings: Sequence[Quad]) -> list[list[int]]:
    """Boundary walks of the plane 4-valent graph; each face is a list of corners."""
    partner = _partner_table(crossings)
    seen = [False] * (4 * len(crossings))
    faces = []
    for start in range(len(seen)):
        if seen[start]:
            continue
        face = []
        dart = start
        while not seen[dart]:
            seen[dart] = True
            other = partner[dart]
            face.append(other)  # corner between other and the next position
            x, q = divmod(other, 4)
            dart = 4 * x + (q + 1) % 4
        faces.append(face)
    return faces


def _partner_table(crossings: Sequence[Quad]) -> list[int]:
    where: dict[int, list[int]] = {}
    for x, quad in enumerate(crossings):
        for p, label in enumerate(quad):
            where.setdefault(label, []).append(4 * x + p)
    partner = [0] * (4 * len(crossings))
    for d1, d2 in where.values():
        partner[d1] = d2
        partner[d2] = d1
    return partner


def _validate(crossings: tuple[Quad, ...]) -> tuple[int, ...]:
    c = len(crossings)
    if c == 0:
        raise DiagramError("empty diagram")
    n_labels = 2 * c
    counts: dict[int, int] = {}
    for i, quad in enumerate(crossings):
        if len(quad) != 4:
            raise DiagramError(f"crossing {i} has {len(quad)} labels, expected 4")
        for label in quad:
            if not 1 <= label <= n_labels:
                raise DiagramError(f"crossing {i} X{quad}: label {label} outside 1..{n_labels}")
            counts[label] = counts.get(label, 0) + 1
    for label in range(1, n_labels + 1):
        if counts.get(label, 0) != 2:
            raise DiagramError(f"label {label} used {counts.get(label, 0)} times, expected 2")

    signs = tuple(_crossing_sign(i, quad, n_labels) for i, quad in enumerate(crossings))

    incoming = sorted(
        [quad[0] for quad in crossings]
        + [quad[1] if s > 0 else quad[3] for quad, s in zip(crossings, signs)]
    )
    if incoming != list(range(1, n_labels + 1)):
        raise DiagramError("strand labels do not form a single oriented component")

    parent = list(range(c))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    partner = _partner_table(crossings)
    for dart, other in enumerate(partner):
        parent[find(dart // 4)] = find(other // 4)
    if len({find(i) for i in range(c)}) != 1:
        raise DiagramError("diagram is disconnected")

    n_faces = len(_trace_faces(crossings))
    if c - 2 * c + n_faces != 2:
        raise DiagramError(
            f"cyclic orders are not planar: Euler characteristic {n_faces - c}, expected 2"
        )
    return signs


@dataclass(frozen=True)
class Diagram:
    """A validated, connected, planar knot diagram with at least one crossing."""

    crossings: tuple[Quad, ...]
    signs: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        crossings = tuple(tuple(int(v) for v in quad) for quad in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "signs", _validate(crossings))

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """Dart at the other end of the strand leaving ``dart``."""
        return tuple(_partner_table(self.crossings))

    def label(self, dart: int) -> int:
        x, p = divmod(dart, 4)
        return self.crossings[x][p]

    def is_outgoing(self, dart: int) -> bool:
        """True if the knot leaves the crossing through ``dart``."""
        x, p = divmod(dart, 4)
        return p == 2 or p == (3 if self.signs[x] > 0 else 1)

    def pd_string(self) -> str:
        return ",".join("X({},{},{},{})".format(*quad) for quad in self.crossings)

    def __str__(self) -> str:
        return self.pd_string()


_PD_TOKEN = re.compile(r"\s*X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]]\s*")


def parse_pd(text: str) -> Diagram:
    """Parse ``X(a,b,c,d),X(...),...`` (square brackets and ``PD[...]`` also accepted)."""
    body = text.strip()
    m = re.fullmatch(r"PD\s*[\[\(](.*)[\]\)]", body, flags=re.S)
    if m:
        body = m.group(1).strip()
    if not body:
        raise DiagramError("empty diagram")
    crossings = []
    pos = 0
    while pos < len(body):
        m = _PD_TOKEN.match(body, pos)
        if not m:
            rest = body[pos:].strip()
            end = re.search(r"[\)\]]", rest)
            bad = rest[: end.end()] if end else rest[:20]
            raise DiagramError(f"malformed PD token at offset {pos}: {bad!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
        if pos < len(body):
            if body[pos] != ",":
                raise DiagramError(f"expected ',' at offset {pos}: {body[pos:pos + 20]!r}")
            pos += 1
            if pos == len(body):
                raise DiagramError("trailing ',' in PD code")
    return Diagram(tuple(crossings))


def faces(diagram: Diagram) -> list[list[int]]:
    """Faces of the sphere embedding, each given as its list of corners."""
    return _trace_faces(diagram.crossings)


def mirror(diagram: Diagram) -> Diagram:
    """Swap over and under at every crossing, keeping the plane projection."""
    out = []
    for (a, b, c, d), s in zip(diagram.crossings, diagram.signs):
        # the new incoming under-strand is the old incoming over-strand
        out.append((b, c, d, a) if s > 0 else (d, a, b, c))
    return Diagram(tuple(out))


# -- Kauffman states -------------------------------------------------------

KauffmanState = tuple[str, ...]


def all_state(diagram: Diagram, choice: str) -> KauffmanState:
    return (choice,) * diagram.c


def oriented_state(diagram: Diagram) -> KauffmanState:
    return tuple(A if s > 0 else B for s in diagram.signs)


def _check_state(diagram: Diagram, state: Sequence[str]) -> KauffmanState:
    state = tuple(state)
    if len(state) != diagram.c or any(s not in SMOOTHING for s in state):
        raise DiagramError(f"state must be {diagram.c} letters from {{A, B}}")
    return state


def state_circles(diagram: Diagram, state: Sequence[str]) -> int:
    """Number of circles after smoothing every crossing per ``state``."""
    state = _check_state(diagram, state)
    parent = {label: label for label in range(1, 2 * diagram.c + 1)}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for quad, choice in zip(diagram.crossings, state):
        for p, q in SMOOTHING[choice]:
            parent[find(quad[p])] = find(quad[q])
    return len({find(v) for v in parent})


def s_a(diagram: Diagram) -> int:
    return state_circles(diagram, all_state(diagram, A))


def s_b(diagram: Diagram) -> int:
    return state_circles(diagram, all_state(diagram, B))


@dataclass(frozen=True)
class StateStep:
    """One passage of a state circle through a crossing."""

    crossing: int
    enter: int  # position
    leave: int  # position
    arc: int  # 0 for the smoothing arc touching position 0, else 1


def state_walks(diagram: Diagram, state: Sequence[str]) -> list[list[StateStep]]:
    """Trace every state circle as the sequence of crossings it passes through.

    Each smoothing arc is used exactly once over all walks.  The direction of
    each walk is arbitrary here; :mod:`turaev.ribbon` orients them.
    """
    state = _check_state(diagram, state)
    pair = []
    for choice in state:
        table = [0] * 4
        for p, q in SMOOTHING[choice]:
            table[p], table[q] = q, p
        pair.append(table)
    seen = [False] * (4 * diagram.c)
    walks = []
    for start in range(len(seen)):
        if seen[start]:
            continue
        walk = []
        dart = start
        while not seen[dart]:
            x, p = divmod(dart, 4)
            q = pair[x][p]
            seen[dart] = seen[4 * x + q] = True
            walk.append(StateStep(x, p, q, 0 if 0 in (p, q) else 1))
            dart = diagram.partner[4 * x + q]
        walks.append(walk)
    return walks


# -- construction from port graphs ------------------------------------------


def _from_ports(n: int, under: Sequence[int], link: dict[int, int], start: int) -> Diagram:
    """Build a PD code from crossings whose ports are joined by ``link``.

    ``under[x]`` is the position (0 or 1) of one end of the under-strand of
    crossing ``x``; the strand through a crossing joins ports ``p`` and
    ``p + 2``.  The knot is oriented so that it enters through port ``start``.
    """
    n_labels = 2 * n
    port_label: dict[int, int] = {}
    entries = []
    port = start
    for k in range(n_labels):
        if port in port_label:
            raise DiagramError("closure is a link, not a knot")
        x, p = divmod(port, 4)
        exit_port = 4 * x + (p + 2) % 4
        port_label[port] = k + 1
        port_label[exit_port] = (k + 1) % n_labels + 1
        entries.append(port)
        port = link[exit_port]
    if port != start or len(port_label) != 4 * n:
        raise DiagramError("closure is a link, not a knot")
    entry_set = set(entries)
    crossings = []
    for x in range(n):
        e = 4 * x + under[x]
        if e not in entry_set:
            e = 4 * x + (under[x] + 2) % 4
        p0 = e % 4
        crossings.append(tuple(port_label[4 * x + (p0 + i) % 4] for i in range(4)))
    return Diagram(tuple(crossings))


def splice(diagram: Diagram, x: int, pairs: tuple[tuple[int, int], tuple[int, int]]) -> Diagram:
    """Remove crossing ``x``, reconnecting its positions according to ``pairs``.

    Raises :class:`UnknotDiagram` when nothing remains and
    :class:`DiagramError` when the result has more than one component.
    """
    inner = {}
    for p, q in pairs:
        inner[p], inner[q] = q, p
    partner = diagram.partner

    def outward(p: int) -> int | None:
        # follow strands through x until leaving it; None for a closed loop
        for _ in range(4):
            d = partner[4 * x + inner[p]]
            if d // 4 != x:
                return d
            p = d % 4
        return None

    keep = [y for y in range(diagram.c) if y != x]
    if not keep:
        raise UnknotDiagram("diagram reduces to the crossingless unknot")
    index = {y: i for i, y in enumerate(keep)}

    def renum(d: int) -> int:
        y, p = divmod(d, 4)
        return 4 * index[y] + p

    link: dict[int, int] = {}
    for y in keep:
        for p in range(4):
            d = 4 * y + p
            other = partner[d]
            if other // 4 == x:
                other = outward(other % 4)
                if other is None:
                    raise ConsistencyError("splice produced a detached circle")
            link[renum(d)] = renum(other)
    if any(link[link[d]] != d for d in link):
        raise ConsistencyError("splice produced an inconsistent port matching")
    return _from_ports(len(keep), [0] * len(keep), link, 0)


# -- braids -------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    """Braid word; letter ``+i`` is sigma_i and ``-i`` its inverse (``i >= 1``)."""

    letters: tuple[int, ...]
    strands: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))
        if self.strands < 2:
            raise DiagramError("a braid needs at least 2 strands")
        for v in self.letters:
            if v == 0 or abs(v) >= self.strands:
                raise DiagramError(f"generator index {abs(v)} invalid for {self.strands} strands")

    def permutation(self) -> tuple[int, ...]:
        """Image of each starting position after reading the word."""
        pos = list(range(self.strands))  # pos[strand] = current position
        for v in self.letters:
            i = abs(v) - 1
            for s in range(self.strands):
                if pos[s] == i:
                    pos[s] = i + 1
                elif pos[s] == i + 1:
                    pos[s] = i
        return tuple(pos)

    def is_knot(self) -> bool:
        perm = self.permutation()
        seen, s = set(), 0
        while s not in seen:
            seen.add(s)
            s = perm[s]
        return len(seen) == self.strands

    def __str__(self) -> str:
        return " ".join(f"s{v}" if v > 0 else f"s{-v}^-1" for v in self.letters)


_BRAID_TOKEN = re.compile(r"([sS])(\d+)(?:\^(-?\d+))?")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated ``s1``, ``s1^-1``, ``S1`` (inverse) tokens.

    A power ``s1^3`` expands to three letters.  Without ``strands`` the
    smallest strand count that fits the word is used.
    """
    letters: list[int] = []
    for token in text.replace(",", " ").split():
        m = _BRAID_TOKEN.fullmatch(token)
        if not m:
            raise DiagramError(f"malformed braid token {token!r}")
        gen = int(m.group(2))
        power = int(m.group(3)) if m.group(3) is not None else 1
        if m.group(1) == "S":
            power = -power
        if power == 0:
            raise DiagramError(f"zero exponent in braid token {token!r}")
        letters.extend([gen if power > 0 else -gen] * abs(power))
    if not letters:
        raise DiagramError("empty braid word")
    if strands is None:
        strands = max(abs(v) for v in letters) + 1
    return BraidWord(tuple(letters), strands)


def braid_closure(word: BraidWord | Iterable[int], strands: int | None = None) -> Diagram:
    """Diagram of the closure of a braid; crossing ``k`` comes from letter ``k``.

    Strands run downwards.  Ports are listed top-left, bottom-left,
    bottom-right, top-right, and a positive letter puts the strand travelling
    from position ``i`` to ``i + 1`` over, which makes the crossing sign equal
    to the letter's sign.
    """
    if not isinstance(word, BraidWord):
        letters = tuple(word)
        word = BraidWord(letters, strands if strands is not None else max(map(abs, letters), default=1) + 1)
    if not word.letters:
        raise DiagramError("empty braid word")
    if not word.is_knot():
        raise DiagramError("closure is a link, not a knot")
    n = len(word.letters)
    top: list[int | None] = [None] * word.strands
    cur: list[int | None] = [None] * word.strands
    link: dict[int, int] = {}
    under = []

    def attach(position: int, port: int) -> None:
        if cur[position] is None:
            top[position] = port
        else:
            link[cur[position]] = port
            link[port] = cur[position]

    for k, v in enumerate(word.letters):
        i = abs(v) - 1
        attach(i, 4 * k + 0)
        attach(i + 1, 4 * k + 3)
        cur[i], cur[i + 1] = 4 * k + 1, 4 * k + 2
        under.append(1 if v > 0 else 0)
    for position in range(word.strands):
        link[cur[position]] = top[position]
        link[top[position]] = cur[position]
    return _from_ports(n, under, link, 0)
