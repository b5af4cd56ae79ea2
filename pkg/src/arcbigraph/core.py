"""Core types: bipartite graphs, circular orderings, and arcs on a discrete clock.

Clock positions are the 1-based hour markers 1..m; "clockwise" means increasing
position with wraparound. A closed arc [start, end] is the set of positions met
while walking clockwise from start to end, both included. start == end denotes
the one-position arc, so the full circle is not representable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping


class Error(Exception):
    """Base class for all errors raised by this package."""


class InputError(Error):
    """Malformed or mismatched input: bad names, wrong vertex set, clock mismatch."""


class Side(str, Enum):
    X = "X"
    Y = "Y"

    def other(self) -> "Side":
        return Side.Y if self is Side.X else Side.X


class Bigraph:
    """Bipartite graph with named vertices on two sides; edges only cross sides.

    Vertices are stored side-by-side: all X vertices first, then all Y vertices,
    each block in declaration order. Biadjacency rows follow the X order and
    columns the Y order.
    """

    __slots__ = ("x_names", "y_names", "edges", "_sides", "_adj")

    def __init__(self, vertices: Iterable, edges: Iterable = ()):
        xs: list[str] = []
        ys: list[str] = []
        sides: dict[str, Side] = {}
        for name, side in vertices:
            if not isinstance(name, str) or not name:
                raise InputError(f"vertex name must be a nonempty string, got {name!r}")
            if name in sides:
                raise InputError(f"duplicate vertex name {name!r}")
            side = Side(side)
            sides[name] = side
            (xs if side is Side.X else ys).append(name)
        normalized = set()
        for pair in edges:
            u, v = pair
            for w in (u, v):
                if w not in sides:
                    raise InputError(f"edge ({u}, {v}) references undeclared vertex {w!r}")
            if sides[u] is sides[v]:
                raise InputError(
                    f"edge ({u}, {v}) joins two {sides[u].value}-side vertices"
                )
            if sides[u] is Side.Y:
                u, v = v, u
            normalized.add((u, v))
        adj: dict[str, set[str]] = {name: set() for name in sides}
        for x, y in normalized:
            adj[x].add(y)
            adj[y].add(x)
        self.x_names = tuple(xs)
        self.y_names = tuple(ys)
        self.edges = frozenset(normalized)
        self._sides = sides
        self._adj = {name: frozenset(nbrs) for name, nbrs in adj.items()}

    @property
    def names(self) -> tuple[str, ...]:
        return self.x_names + self.y_names

    @property
    def vertices(self) -> tuple[tuple[str, Side], ...]:
        return tuple((name, self._sides[name]) for name in self.names)

    @property
    def n(self) -> int:
        return len(self._sides)

    def side_of(self, name: str) -> Side:
        try:
            return self._sides[name]
        except KeyError:
            raise InputError(f"unknown vertex {name!r}") from None

    def has_vertex(self, name: str) -> bool:
        return name in self._sides

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.neighbors(u)

    def neighbors(self, name: str) -> frozenset:
        try:
            return self._adj[name]
        except KeyError:
            raise InputError(f"unknown vertex {name!r}") from None

    def biadjacency(self) -> list[list[int]]:
        """0/1 matrix; rows follow x_names, columns follow y_names."""
        return [
            [1 if y in self._adj[x] else 0 for y in self.y_names]
            for x in self.x_names
        ]

    def side_swapped(self) -> "Bigraph":
        """Same graph with the X and Y labels exchanged."""
        return Bigraph(
            [(name, side.other()) for name, side in self.vertices], self.edges
        )

    def __eq__(self, other):
        if not isinstance(other, Bigraph):
            return NotImplemented
        return (
            self.x_names == other.x_names
            and self.y_names == other.y_names
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.x_names, self.y_names, self.edges))

    def __repr__(self):
        return (
            f"Bigraph(|X|={len(self.x_names)}, |Y|={len(self.y_names)}, "
            f"edges={len(self.edges)})"
        )


def graph_fingerprint(graph: Bigraph) -> str:
    """Canonical sha256 fingerprint of a bigraph (stable across runs)."""
    payload = json.dumps(
        {
            "x": list(graph.x_names),
            "y": list(graph.y_names),
            "edges": sorted(graph.edges),
        },
        separators=(",", ":"),
    )
    return "sha256:" + hashlib.sha256(payload.encode("utf-8")).hexdigest()


class CircularOrdering:
    """A bijection between n vertices and the clock positions 1..n.

    position(sequence[i]) == i + 1.
    """

    __slots__ = ("sequence", "_pos")

    def __init__(self, sequence: Iterable[str]):
        self.sequence = tuple(sequence)
        pos: dict[str, int] = {}
        for i, name in enumerate(self.sequence, start=1):
            if name in pos:
                raise InputError(f"vertex {name!r} appears twice in the ordering")
            pos[name] = i
        self._pos = pos

    @property
    def n(self) -> int:
        return len(self.sequence)

    @property
    def positions(self) -> dict[str, int]:
        return self._pos

    def position(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise InputError(f"vertex {name!r} is not in the ordering") from None

    def vertex_at(self, position: int) -> str:
        if not 1 <= position <= len(self.sequence):
            raise InputError(f"position {position} out of range 1..{len(self.sequence)}")
        return self.sequence[position - 1]

    def rotated(self, k: int) -> "CircularOrdering":
        """Ordering with the sequence rotated left by k places."""
        if not self.sequence:
            return self
        k %= len(self.sequence)
        return CircularOrdering(self.sequence[k:] + self.sequence[:k])

    def check_matches(self, graph: Bigraph) -> None:
        if set(self.sequence) != set(graph.names) or len(self.sequence) != graph.n:
            raise InputError("ordering does not cover exactly the graph's vertices")

    def __iter__(self) -> Iterator[str]:
        return iter(self.sequence)

    def __len__(self):
        return len(self.sequence)

    def __eq__(self, other):
        if not isinstance(other, CircularOrdering):
            return NotImplemented
        return self.sequence == other.sequence

    def __hash__(self):
        return hash(self.sequence)

    def __repr__(self):
        return f"CircularOrdering({', '.join(self.sequence)})"


def cyclic_interval(a: int, b: int, m: int) -> list[int]:
    """Positions strictly between a and b walking clockwise, in walk order.

    Excludes a and b; if b immediately follows a the interval is empty; if
    a == b it is all m - 1 other positions.
    """
    for p in (a, b):
        if not 1 <= p <= m:
            raise InputError(f"position {p} out of range 1..{m}")
    out = []
    q = a % m + 1
    while q != b:
        out.append(q)
        q = q % m + 1
    return out


@dataclass(frozen=True)
class Arc:
    """Closed arc [start, end] on an m-position clock (see module docstring)."""

    start: int
    end: int
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"clock size must be >= 1, got {self.m}")
        for p in (self.start, self.end):
            if not 1 <= p <= self.m:
                raise InputError(f"arc position {p} out of range 1..{self.m}")

    def span(self) -> int:
        """Number of clockwise steps from start to end (0 for a point arc)."""
        return (self.end - self.start) % self.m

    def contains(self, position: int) -> bool:
        if not 1 <= position <= self.m:
            raise InputError(f"position {position} out of range 1..{self.m}")
        return (position - self.start) % self.m <= self.span()

    def positions(self) -> tuple[int, ...]:
        """All positions on the arc, in clockwise walk order."""
        return tuple(
            (self.start - 1 + k) % self.m + 1 for k in range(self.span() + 1)
        )

    def __repr__(self):
        return f"Arc[{self.start},{self.end}]@{self.m}"


def arc_contains(arc: Arc, position: int) -> bool:
    """True iff position lies on the closed clockwise traversal of the arc."""
    return arc.contains(position)


def arcs_intersect(a: Arc, b: Arc) -> bool:
    """True iff the two arcs share at least one clock position.

    Two closed clockwise arcs meet iff one contains the other's end position:
    from any shared point, walking clockwise stays inside both arcs until the
    nearer of the two end positions, which then lies in both.
    """
    if a.m != b.m:
        raise InputError(f"clock size mismatch: {a.m} vs {b.m}")
    return b.contains(a.end) or a.contains(b.end)


class ArcModel:
    """Arcs on a shared clock, keyed by vertex name (insertion order preserved)."""

    __slots__ = ("m", "arcs")

    def __init__(self, m: int, arcs: Mapping):
        if m < 0:
            raise InputError(f"clock size must be >= 0, got {m}")
        self.m = int(m)
        out: dict[str, Arc] = {}
        for name, arc in dict(arcs).items():
            if not isinstance(arc, Arc):
                start, end = arc
                arc = Arc(int(start), int(end), self.m)
            elif arc.m != self.m:
                raise InputError(
                    f"arc for {name!r} lives on a {arc.m}-clock, model uses {self.m}"
                )
            out[name] = arc
        self.arcs = out

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.arcs)

    def arc(self, name: str) -> Arc:
        try:
            return self.arcs[name]
        except KeyError:
            raise InputError(f"no arc for vertex {name!r}") from None

    def __len__(self):
        return len(self.arcs)

    def __eq__(self, other):
        if not isinstance(other, ArcModel):
            return NotImplemented
        return self.m == other.m and self.arcs == other.arcs

    def __repr__(self):
        return f"ArcModel(m={self.m}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class Witness:
    """Minimal, replayable evidence for a failed check.

    kind is one of "edge-violation", "uncovered-cell", "pattern-match",
    "model-mismatch"; detail carries the kind-specific payload.
    """

    kind: str
    vertices: tuple = ()
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    status: str  # "pass" | "fail"
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    @classmethod
    def passed(cls) -> "Verdict":
        return cls("pass")

    @classmethod
    def failed(cls, witness: Witness) -> "Verdict":
        return cls("fail", witness)


def intersection_bigraph(model: ArcModel, sides: Mapping[str, Side]) -> Bigraph:
    """The bigraph realized by a model: cross-side pairs with meeting arcs.

    Same-side arc intersections carry no meaning and are ignored.
    """
    missing = set(model.arcs) - set(sides)
    if missing:
        raise InputError(f"no side assigned to {sorted(missing)}")
    vertices = [(name, Side(sides[name])) for name in model.arcs]
    xs = [name for name, side in vertices if side is Side.X]
    ys = [name for name, side in vertices if side is Side.Y]
    edges = [
        (x, y)
        for x in xs
        for y in ys
        if arcs_intersect(model.arcs[x], model.arcs[y])
    ]
    return Bigraph(vertices, edges)


def verify_model(graph: Bigraph, ordering, model: ArcModel) -> Verdict:
    """Pass iff the model's arc intersections are exactly the graph's edges.

    The ordering argument is optional context for the witness; it does not
    influence the verdict. On fail the witness lists every mismatched pair.
    """
    if set(model.arcs) != set(graph.names):
        raise InputError("model does not cover exactly the graph's vertices")
    missing = []
    spurious = []
    for x in graph.x_names:
        ax = model.arcs[x]
        nbrs = graph.neighbors(x)
        for y in graph.y_names:
            meet = arcs_intersect(ax, model.arcs[y])
            if meet and y not in nbrs:
                spurious.append([x, y])
            elif not meet and y in nbrs:
                missing.append([x, y])
    if not missing and not spurious:
        return Verdict.passed()
    involved = []
    seen = set()
    for pair in missing + spurious:
        for name in pair:
            if name not in seen:
                seen.add(name)
                pos = ordering.position(name) if ordering is not None else 0
                involved.append((name, pos))
    witness = Witness(
        kind="model-mismatch",
        vertices=tuple(involved),
        detail={"missing-edge": missing, "spurious-intersection": spurious},
    )
    return Verdict.failed(witness)
