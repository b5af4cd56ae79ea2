"""Building arc models from orderings, and orderings from arc models.

One constructor serves all three circular-arc characterizations: the arc of a
vertex runs clockwise from the position of the last member of its anticlockwise
neighbor run up to the vertex's own position (a point arc when the run is
empty). The reverse direction sorts vertices by arc end position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checkers import (
    check_bi_circular,
    check_ca_pattern_free,
    check_total_circular,
    compute_neighbor_runs,
)
from .core import (
    Arc,
    ArcModel,
    Bigraph,
    CircularOrdering,
    InputError,
    Verdict,
    graph_fingerprint,
    verify_model,
)


class DuplicateEndpointError(InputError):
    """Two arcs share a clockwise end position, so no ordering can be derived."""


@dataclass(frozen=True)
class RunAnchor:
    """Where a vertex's arc starts and how many run members produced it.

    start == own position exactly when the neighbor run is empty.
    """

    vertex: str
    start: int
    run_length: int


@dataclass(frozen=True)
class Certificate:
    """A verified membership proof: ordering, arc model, and the checker used.

    Replaying the method's checker on (graph, ordering) passes, and when a
    model is present verify_model passes; graph_hash ties the certificate to
    its graph.
    """

    method: str
    ordering: CircularOrdering
    model: ArcModel | None
    graph_hash: str


@dataclass(frozen=True)
class TheoremDiscrepancy:
    """Checker passed but the constructed model does not realize the graph.

    This outcome contradicts the constructive characterizations; it is
    reported as data, never swallowed.
    """

    method: str
    ordering: CircularOrdering
    model: ArcModel
    mismatches: dict
    graph: Bigraph


CHECKERS_WITH_MODEL = {
    "total": check_total_circular,
    "bicirc": check_bi_circular,
    "pattern": check_ca_pattern_free,
}


def canonical_arc_model(
    graph: Bigraph, ordering: CircularOrdering
) -> tuple[ArcModel, dict[str, RunAnchor]]:
    """The arc model induced by an ordering (no validity check is performed).

    Clock size equals the number of vertices; the arc of the vertex at
    position p ends at p and starts at the position of the last member of its
    anticlockwise neighbor run (p itself when the run is empty).
    """
    ordering.check_matches(graph)
    n = graph.n
    runs = compute_neighbor_runs(graph, ordering)
    arcs = {}
    anchors = {}
    for p, v in enumerate(ordering.sequence, start=1):
        cells = runs[v].cells
        start = ordering.position(cells[-1]) if cells else p
        arcs[v] = Arc(start, p, n)
        anchors[v] = RunAnchor(vertex=v, start=start, run_length=len(cells))
    return ArcModel(n, arcs), anchors


def ordering_from_model(model: ArcModel) -> CircularOrdering:
    """Vertices sorted by ascending arc end position.

    Requires pairwise-distinct end positions; shared endpoints are an error
    (never silently perturbed), naming the colliding vertices.
    """
    by_end: dict[int, str] = {}
    for name, arc in model.arcs.items():
        if arc.end in by_end:
            raise DuplicateEndpointError(
                f"arcs for {by_end[arc.end]!r} and {name!r} share the clockwise "
                f"end position {arc.end}"
            )
        by_end[arc.end] = name
    return CircularOrdering(name for _, name in sorted(by_end.items()))


def certify_checked(
    graph: Bigraph, ordering: CircularOrdering, method: str
) -> Certificate | TheoremDiscrepancy:
    """Build and verify the canonical model for an ordering already checked."""
    model, _ = canonical_arc_model(graph, ordering)
    verdict = verify_model(graph, ordering, model)
    if verdict.ok:
        return Certificate(
            method=method,
            ordering=ordering,
            model=model,
            graph_hash=graph_fingerprint(graph),
        )
    return TheoremDiscrepancy(
        method=method,
        ordering=ordering,
        model=model,
        mismatches=dict(verdict.witness.detail),
        graph=graph,
    )


def realize(
    graph: Bigraph, ordering: CircularOrdering, method: str
) -> Certificate | TheoremDiscrepancy | Verdict:
    """Run a checker and, on pass, construct and verify the canonical model.

    Returns the failing Verdict when the checker rejects the ordering; a
    Certificate when construction verifies; a TheoremDiscrepancy when the
    checker passed but the model does not realize the graph.
    """
    try:
        checker = CHECKERS_WITH_MODEL[method]
    except KeyError:
        raise InputError(
            f"unknown construction method {method!r}; "
            f"expected one of {sorted(CHECKERS_WITH_MODEL)}"
        ) from None
    verdict = checker(graph, ordering)
    if not verdict.ok:
        return verdict
    return certify_checked(graph, ordering, method)
