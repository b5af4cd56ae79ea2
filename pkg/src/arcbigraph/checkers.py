"""Per-ordering predicates for each circular-arc characterization.

Each checker takes a bigraph plus a circular ordering of its vertices and
returns a Verdict: pass, or fail with a minimal witness. All checkers are pure
and deterministic; witnesses are chosen lexicographically smallest by position
tuple (then pattern id).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    Bigraph,
    CircularOrdering,
    InputError,
    Side,
    Verdict,
    Witness,
    cyclic_interval,
)

CA_PATTERNS = ("CA-i", "CA-ii", "CA-iii", "CA-iv")
INTERVAL_TRIPLE_PATTERN = "INT3"
INTERVAL_QUAD_PATTERNS = ("INT4-i", "INT4-ii", "INT4-iii", "INT4-iv")


@dataclass(frozen=True)
class NeighborRun:
    """Maximal anticlockwise run of opposite-side neighbors next to a vertex.

    The run anchors at the nearest opposite-side position anticlockwise of the
    owner (empty if that vertex is not a neighbor) and extends anticlockwise
    through consecutive opposite-side neighbors, skipping same-side positions,
    for at most one full sweep of the opposite side.
    """

    owner: str
    cells: tuple[str, ...]

    def __len__(self):
        return len(self.cells)


def _tables(graph: Bigraph, ordering: CircularOrdering):
    """Position-indexed side bits and adjacency bitmasks (bit p = position p)."""
    ordering.check_matches(graph)
    seq = ordering.sequence
    pos = ordering.positions
    side_is_y = [graph.side_of(v) is Side.Y for v in seq]
    adjbits = []
    for v in seq:
        bits = 0
        for u in graph.neighbors(v):
            bits |= 1 << pos[u]
        adjbits.append(bits)
    return seq, pos, side_is_y, adjbits


def _edges_in_scan_order(graph: Bigraph, pos) -> list[tuple[str, str, int, int]]:
    rows = []
    for x, y in graph.edges:
        px, py = pos[x], pos[y]
        key = (px, py) if px < py else (py, px)
        rows.append((key, x, y, px, py))
    rows.sort()
    return [(x, y, px, py) for _, x, y, px, py in rows]


def check_total_circular(graph: Bigraph, ordering: CircularOrdering) -> Verdict:
    """Total-circular check, cyclic form.

    An edge between the X vertex at position i and the Y vertex at position j
    is covered iff either every Y vertex strictly inside the clockwise interval
    j -> i is adjacent to the X endpoint, or every X vertex strictly inside
    i -> j is adjacent to the Y endpoint.
    """
    seq, pos, side_is_y, adjbits = _tables(graph, ordering)
    n = len(seq)
    for x, y, px, py in _edges_in_scan_order(graph, pos):
        if _covers(adjbits[px - 1], side_is_y, True, py, px, n) or _covers(
            adjbits[py - 1], side_is_y, False, px, py, n
        ):
            continue
        return Verdict.failed(_edge_violation(graph, ordering, x, y, px, py))
    return Verdict.passed()


def _covers(anchor_adj: int, side_is_y, want_y: bool, a: int, b: int, n: int) -> bool:
    """Is every want_y-side vertex strictly inside the clockwise walk a -> b
    adjacent to the anchor?"""
    q = a % n + 1
    while q != b:
        if side_is_y[q - 1] is want_y and not (anchor_adj >> q) & 1:
            return False
        q = q % n + 1
    return True


def _edge_violation(graph, ordering, x, y, px, py) -> Witness:
    n = ordering.n
    y_interval = cyclic_interval(py, px, n)
    x_interval = cyclic_interval(px, py, n)
    blocking_y = [
        v
        for q in y_interval
        if graph.side_of(v := ordering.vertex_at(q)) is Side.Y
        and not graph.has_edge(x, v)
    ]
    blocking_x = [
        v
        for q in x_interval
        if graph.side_of(v := ordering.vertex_at(q)) is Side.X
        and not graph.has_edge(v, y)
    ]
    return Witness(
        kind="edge-violation",
        vertices=((x, px), (y, py)),
        detail={
            "edge": [x, y],
            "y-interval": y_interval,
            "x-interval": x_interval,
            "blocking-y": blocking_y,
            "blocking-x": blocking_x,
        },
    )


def check_total_circular_by_cases(
    graph: Bigraph, ordering: CircularOrdering
) -> Verdict:
    """Total-circular check written out case by case over linear indices.

    Separate code path from check_total_circular, kept as its independent
    cross-check: case i > j tests the index sets {j+1..i-1} (Y side) and
    {i+1..n, 1..j-1} (X side); case i < j tests {i+1..j-1} (X side) and
    {j+1..n, 1..i-1} (Y side).
    """
    ordering.check_matches(graph)
    pos = ordering.positions
    n = ordering.n
    seq = ordering.sequence

    def side_ok(indices, side, anchor):
        for q in indices:
            v = seq[q - 1]
            if graph.side_of(v) is side and not graph.has_edge(anchor, v):
                return False
        return True

    for x, y, px, py in _edges_in_scan_order(graph, pos):
        i, j = px, py
        if i > j:
            first = side_ok(range(j + 1, i), Side.Y, x)
            second = side_ok(
                list(range(i + 1, n + 1)) + list(range(1, j)), Side.X, y
            )
        else:
            first = side_ok(range(i + 1, j), Side.X, y)
            second = side_ok(
                list(range(j + 1, n + 1)) + list(range(1, i)), Side.Y, x
            )
        if not (first or second):
            return Verdict.failed(_edge_violation(graph, ordering, x, y, px, py))
    return Verdict.passed()


def compute_neighbor_runs(
    graph: Bigraph, ordering: CircularOrdering
) -> dict[str, NeighborRun]:
    """The anticlockwise neighbor run of every vertex under this ordering."""
    ordering.check_matches(graph)
    seq = ordering.sequence
    n = len(seq)
    runs = {}
    for p, v in enumerate(seq, start=1):
        own_side = graph.side_of(v)
        nbrs = graph.neighbors(v)
        cells = []
        for step in range(1, n):
            u = seq[(p - 1 - step) % n]
            if graph.side_of(u) is own_side:
                continue
            if u in nbrs:
                cells.append(u)
            else:
                break
        runs[v] = NeighborRun(owner=v, cells=tuple(cells))
    return runs


def check_bi_circular(graph: Bigraph, ordering: CircularOrdering) -> Verdict:
    """Pass iff the neighbor runs jointly cover every edge of the graph.

    An edge (x, y) is covered when y lies in x's run or x lies in y's run. On
    fail the witness is the first uncovered biadjacency cell in row-major order
    (rows: X declaration order; columns: Y declaration order).
    """
    runs = compute_neighbor_runs(graph, ordering)
    covered = set()
    for run in runs.values():
        for u in run.cells:
            covered.add((run.owner, u))
    for x in graph.x_names:
        for y in graph.y_names:
            if not graph.has_edge(x, y):
                continue
            if (x, y) in covered or (y, x) in covered:
                continue
            witness = Witness(
                kind="uncovered-cell",
                vertices=((x, ordering.position(x)), (y, ordering.position(y))),
                detail={"row": x, "column": y},
            )
            return Verdict.failed(witness)
    return Verdict.passed()


def _pattern_witness(seq, quad, pattern) -> Witness:
    return Witness(
        kind="pattern-match",
        vertices=tuple((seq[q - 1], q) for q in quad),
        detail={"pattern": pattern, "positions": list(quad)},
    )


def find_ca_patterns(
    graph: Bigraph, ordering: CircularOrdering, limit: int | None = None
) -> list[Witness]:
    """All forbidden circular-arc configurations over position quadruples.

    Scans i < j < k < l in linear index order (no wraparound) for the four
    configurations; side layouts are symmetric in which side plays which role.
    Matches come in lexicographic (i, j, k, l, pattern id) order, up to limit.
    """
    seq, pos, side_is_y, adj = _tables(graph, ordering)
    n = len(seq)
    out: list[Witness] = []
    for i, j, k, l in combinations(range(1, n + 1), 4):
        si, sj, sk, sl = (
            side_is_y[i - 1],
            side_is_y[j - 1],
            side_is_y[k - 1],
            side_is_y[l - 1],
        )
        if si == sj and sk == sl and si != sk:
            # layout S S T T: constrained cross pairs ik, il, jk, jl
            ik = (adj[i - 1] >> k) & 1
            il = (adj[i - 1] >> l) & 1
            jk = (adj[j - 1] >> k) & 1
            jl = (adj[j - 1] >> l) & 1
            if ik and not jk and not il:
                out.append(
                    _pattern_witness(seq, (i, j, k, l), "CA-ii" if jl else "CA-i")
                )
        elif sj == sk and si == sl and si != sj:
            # layout T S S T: constrained cross pairs ij, ik, jl, kl
            ij = (adj[i - 1] >> j) & 1
            ik = (adj[i - 1] >> k) & 1
            jl = (adj[j - 1] >> l) & 1
            kl = (adj[k - 1] >> l) & 1
            if jl and not ij and not kl:
                out.append(
                    _pattern_witness(seq, (i, j, k, l), "CA-iv" if ik else "CA-iii")
                )
        if limit is not None and len(out) >= limit:
            return out[:limit]
    return out


def check_ca_pattern_free(graph: Bigraph, ordering: CircularOrdering) -> Verdict:
    """Pass iff no forbidden circular-arc configuration occurs in the ordering."""
    matches = find_ca_patterns(graph, ordering, limit=1)
    if matches:
        return Verdict.failed(matches[0])
    return Verdict.passed()


def find_interval_patterns(
    graph: Bigraph,
    ordering: CircularOrdering,
    variant: str,
    limit: int | None = None,
) -> list[Witness]:
    """Forbidden interval-bigraph configurations over triples or quadruples.

    variant "triple": a < b < c with v_a, v_b on one side, v_c on the other,
    edge (v_a, v_c) present and (v_b, v_c) absent. variant "quad": the four
    quadruple configurations INT4-i..INT4-iv.
    """
    if variant not in ("triple", "quad"):
        raise InputError(f"unknown interval pattern variant {variant!r}")
    seq, pos, side_is_y, adj = _tables(graph, ordering)
    n = len(seq)
    out: list[Witness] = []
    if variant == "triple":
        for a, b, c in combinations(range(1, n + 1), 3):
            if side_is_y[a - 1] == side_is_y[b - 1] != side_is_y[c - 1]:
                if (adj[a - 1] >> c) & 1 and not (adj[b - 1] >> c) & 1:
                    out.append(
                        Witness(
                            kind="pattern-match",
                            vertices=tuple((seq[q - 1], q) for q in (a, b, c)),
                            detail={
                                "pattern": INTERVAL_TRIPLE_PATTERN,
                                "positions": [a, b, c],
                            },
                        )
                    )
                    if limit is not None and len(out) >= limit:
                        return out
        return out
    for a, b, c, d in combinations(range(1, n + 1), 4):
        sa, sb, sc, sd = (
            side_is_y[a - 1],
            side_is_y[b - 1],
            side_is_y[c - 1],
            side_is_y[d - 1],
        )
        matched = None
        if sa == sb and sc == sd and sa != sc:
            # layout S S T T: constrained cross pairs ac, ad, bc, bd
            ac = (adj[a - 1] >> c) & 1
            ad = (adj[a - 1] >> d) & 1
            bc = (adj[b - 1] >> c) & 1
            bd = (adj[b - 1] >> d) & 1
            if bc and ad and not ac and not bd:
                matched = "INT4-i"
            elif ac and bd and not ad and not bc:
                matched = "INT4-iv"
        elif sa == sc and sb == sd and sa != sb:
            # layout S T S T: constrained cross pairs ab, ad, bc, cd
            ab = (adj[a - 1] >> b) & 1
            ad = (adj[a - 1] >> d) & 1
            bc = (adj[b - 1] >> c) & 1
            cd = (adj[c - 1] >> d) & 1
            if ad and not ab and not cd:
                matched = "INT4-ii" if bc else "INT4-iii"
        if matched:
            out.append(_pattern_witness(seq, (a, b, c, d), matched))
            if limit is not None and len(out) >= limit:
                return out
    return out


def check_interval_pattern_free(
    graph: Bigraph, ordering: CircularOrdering, variant: str
) -> Verdict:
    """Pass iff no forbidden interval configuration of the variant occurs."""
    matches = find_interval_patterns(graph, ordering, variant, limit=1)
    if matches:
        return Verdict.failed(matches[0])
    return Verdict.passed()
