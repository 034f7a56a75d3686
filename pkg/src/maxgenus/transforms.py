"""Vertex splitting, edge contraction, and the predicates that license them.

A vertex splitting replaces v (degree >= 4) by two adjacent vertices v' and
v'', distributing v's edge-ends between them and adding the splitting edge
v'v''.  Both operations preserve the cycle rank: splitting adds one vertex
and one edge, contraction removes one of each.  Contraction of the splitting
edge undoes the split up to relabeling.

Whether such a move preserves upper embeddability is governed by two vertex
conditions (splitting side) and two edge conditions (contraction side):

* type-I: deg(v) >= 4 and the subgraph induced by v's neighborhood is
  connected -- any splitting at v is safe.
* type-II: deg(v) = 4 and the splitting edge is not a cut-edge of the
  subgraph of the split graph induced by v', v'' and their neighbors.
* condition-I (edge e = v1v2): e is not a cut-edge of the subgraph induced
  by v1, v2 and their neighbors, and contraction leaves a degree-4 vertex.
  This names the same test as type-II viewed from the other side of the move.
* condition-II: the subgraph induced by the neighbors of v1 and v2 (minus
  v1, v2 themselves) is connected and non-empty, and the merged degree is at
  least 4.  This is type-I viewed from the other side.

Edges satisfying I or II are *flexible*; contracting them is
verdict-preserving in both directions, which is what the reducer in
maxgenus.reduction exploits.

Loops at the split vertex are rejected unless the caller opts in, in which
case each loop's two ends are assigned independently (ends on both sides
turn the loop into an edge parallel to the splitting edge).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    LoopContractionError,
    SplitSpecError,
    UnknownEdgeError,
    UnknownVertexError,
)
from .multigraph import MultiGraph

TYPE_I = "type-I"
TYPE_II = "type-II"
CONDITION_I = "condition-I"
CONDITION_II = "condition-II"
NO_RULE = "none"


@dataclass(frozen=True)
class SplitSpec:
    """Assignment of the edge-ends at one vertex to the two sides of a split.

    An edge-end is (edge id, end index); end index 0/1 names the first or
    second slot of the edge's endpoint pair.  A non-loop edge at v has one
    end there, a loop has both.  side_b is implicit: everything at v that is
    not in side_a.
    """

    vertex: int
    side_a: frozenset[tuple[int, int]]

    def side_b(self, g: MultiGraph) -> frozenset[tuple[int, int]]:
        return frozenset(g.edge_ends_at(self.vertex)) - self.side_a

    def as_dict(self) -> dict:
        return {"vertex": self.vertex, "side_a": sorted(self.side_a)}

    @classmethod
    def from_dict(cls, obj: dict) -> SplitSpec:
        return cls(
            vertex=int(obj["vertex"]),
            side_a=frozenset((int(e), int(k)) for e, k in obj["side_a"]),
        )


@dataclass(frozen=True)
class SplitResult:
    graph: MultiGraph
    v_prime: int
    v_double_prime: int
    splitting_edge: int
    id_map: dict[int, int]  # old edge id -> new edge id (identity here)


def split_spec_by_neighbors(
    g: MultiGraph, v: int, side_a_neighbors: set[int]
) -> SplitSpec:
    """Convenience spec: side A takes every end pointing at the named
    neighbors.  Parallel edges travel together; loops are not expressible."""
    if not g.has_vertex(v):
        raise UnknownVertexError(f"no vertex {v}")
    unknown = side_a_neighbors - g.neighbors(v)
    if unknown:
        raise SplitSpecError(f"{sorted(unknown)} are not neighbors of {v}")
    side_a = frozenset(
        (eid, k)
        for eid, k in g.edge_ends_at(v)
        if g.endpoints(eid)[1 - k] in side_a_neighbors
        and not g.is_loop(eid)
    )
    return SplitSpec(vertex=v, side_a=side_a)


def _validate_spec(
    g: MultiGraph, spec: SplitSpec, allow_loops: bool, require_min_degree: bool
) -> tuple[frozenset, frozenset]:
    v = spec.vertex
    if not g.has_vertex(v):
        raise UnknownVertexError(f"no vertex {v}")
    if g.degree(v) < 4:
        raise SplitSpecError(f"degree of {v} is {g.degree(v)}, splitting needs >= 4")
    all_ends = frozenset(g.edge_ends_at(v))
    if not spec.side_a <= all_ends:
        raise SplitSpecError(
            f"side A contains ends not at vertex {v}: "
            f"{sorted(spec.side_a - all_ends)}"
        )
    side_b = all_ends - spec.side_a
    if not spec.side_a or not side_b:
        raise SplitSpecError("both sides of a split must be non-empty")
    if not allow_loops and any(g.is_loop(eid) for eid, _ in all_ends):
        raise SplitSpecError(
            f"vertex {v} carries a loop; pass allow_loops=True to assign "
            f"loop ends explicitly"
        )
    if require_min_degree and (len(spec.side_a) < 2 or len(side_b) < 2):
        raise SplitSpecError(
            "min-degree-3 preservation requires >= 2 ends per side"
        )
    return all_ends, side_b


def split_vertex(
    g: MultiGraph,
    spec: SplitSpec,
    *,
    allow_loops: bool = False,
    require_min_degree: bool = False,
) -> SplitResult:
    """Split spec.vertex; side A ends move to v', side B ends to v''.

    Old edges keep their ids with rewritten endpoints; the new splitting
    edge gets the next free id.  Both |V| and |E| grow by one.
    """
    v = spec.vertex
    _, side_b = _validate_spec(g, spec, allow_loops, require_min_degree)
    v_prime = max(g.vertices) + 1
    v_second = v_prime + 1
    replacement = {}
    for eid, k in spec.side_a:
        replacement[(eid, k)] = v_prime
    for eid, k in side_b:
        replacement[(eid, k)] = v_second

    vertices = [x for x in g.vertices if x != v] + [v_prime, v_second]
    edges = []
    for eid, u, w in g.edges:
        nu = replacement.get((eid, 0), u)
        nw = replacement.get((eid, 1), w)
        edges.append((eid, nu, nw))
    splitting_edge = max((e[0] for e in g.edges), default=-1) + 1
    edges.append((splitting_edge, v_prime, v_second))
    graph = MultiGraph.from_parts(vertices, edges)
    return SplitResult(
        graph=graph,
        v_prime=v_prime,
        v_double_prime=v_second,
        splitting_edge=splitting_edge,
        id_map={eid: eid for eid, _, _ in g.edges},
    )


def contract_edge(g: MultiGraph, eid: int) -> tuple[MultiGraph, dict[int, int]]:
    """Contract a non-loop edge: endpoints merge into the smaller id.

    Parallels of the contracted edge become loops at the merged vertex; all
    surviving edges keep their ids.  |V| and |E| both shrink by one, so the
    cycle rank is preserved (which is why loop contraction is refused: it
    would destroy a cycle).
    """
    u, w = g.endpoints(eid)
    if u == w:
        raise LoopContractionError(f"edge {eid} is a loop")
    merged, gone = (u, w) if u < w else (w, u)
    vertices = [x for x in g.vertices if x != gone]
    edges = []
    for other, a, b in g.edges:
        if other == eid:
            continue
        na = merged if a == gone else a
        nb = merged if b == gone else b
        edges.append((other, na, nb))
    id_map = {other: other for other, _, _ in g.edges if other != eid}
    return MultiGraph.from_parts(vertices, edges), id_map


# -- derived subgraphs ---------------------------------------------------------


def splitting_subgraph(result: SplitResult) -> MultiGraph:
    """Subgraph of the split graph induced by v', v'' and their neighbors."""
    g = result.graph
    span = (
        {result.v_prime, result.v_double_prime}
        | g.neighbors(result.v_prime)
        | g.neighbors(result.v_double_prime)
    )
    return g.induced_subgraph(span)


def edge_global_subgraph(g: MultiGraph, eid: int) -> MultiGraph:
    """Subgraph induced by the edge's endpoints and all their neighbors."""
    u, w = g.endpoints(eid)
    if u == w:
        raise LoopContractionError(f"edge {eid} is a loop")
    return g.induced_subgraph({u, w} | g.neighbors(u) | g.neighbors(w))


def edge_local_subgraph(g: MultiGraph, eid: int) -> MultiGraph:
    """Subgraph induced by the endpoints' neighbors, endpoints excluded."""
    u, w = g.endpoints(eid)
    if u == w:
        raise LoopContractionError(f"edge {eid} is a loop")
    return g.induced_subgraph((g.neighbors(u) | g.neighbors(w)) - {u, w})


# -- flexibility predicates ------------------------------------------------------


@dataclass(frozen=True)
class FlexibilityVerdict:
    """Outcome of a flexibility test, with the evidence that decided it."""

    subject_kind: str  # "vertex" | "edge"
    subject: int
    verdict: bool
    rule: str  # TYPE_I, TYPE_II, CONDITION_I, CONDITION_II or NO_RULE
    subgraph: MultiGraph | None = None
    connected: bool | None = None
    cut_edge: bool | None = None
    merged_degree: int | None = None

    def __bool__(self) -> bool:
        return self.verdict


def is_type1_flexible(g: MultiGraph, v: int) -> FlexibilityVerdict:
    """deg(v) >= 4 with a connected, non-empty local subgraph."""
    if not g.has_vertex(v):
        raise UnknownVertexError(f"no vertex {v}")
    local = g.local_subgraph(v)
    connected = local.is_connected()
    ok = g.degree(v) >= 4 and connected
    return FlexibilityVerdict(
        subject_kind="vertex",
        subject=v,
        verdict=ok,
        rule=TYPE_I if ok else NO_RULE,
        subgraph=local,
        connected=connected,
    )


def is_type2_flexible_split(
    g: MultiGraph, spec: SplitSpec, *, allow_loops: bool = False
) -> FlexibilityVerdict:
    """Degree-4 split whose splitting edge is not a cut-edge of the
    surrounding induced subgraph.  Performs the split transiently.

    Only defined at degree exactly 4 (degree 5 already admits
    counterexamples), so any other degree raises.
    """
    v = spec.vertex
    if not g.has_vertex(v):
        raise UnknownVertexError(f"no vertex {v}")
    if g.degree(v) != 4:
        raise SplitSpecError(
            f"degree of {v} is {g.degree(v)}; this test is defined only "
            f"at degree 4"
        )
    result = split_vertex(g, spec, allow_loops=allow_loops)
    surrounding = splitting_subgraph(result)
    cut = surrounding.is_cut_edge(result.splitting_edge)
    return FlexibilityVerdict(
        subject_kind="vertex",
        subject=v,
        verdict=not cut,
        rule=TYPE_II if not cut else NO_RULE,
        subgraph=surrounding,
        cut_edge=cut,
    )


def is_flexible_edge(g: MultiGraph, eid: int) -> FlexibilityVerdict:
    """Is contracting this edge verdict-preserving (condition I or II)?"""
    if not g.has_edge(eid):
        raise UnknownEdgeError(f"no edge {eid}")
    u, w = g.endpoints(eid)
    if u == w:
        raise LoopContractionError(f"edge {eid} is a loop")
    merged_degree = g.degree(u) + g.degree(w) - 2

    global_sub = edge_global_subgraph(g, eid)
    cut = global_sub.is_cut_edge(eid)
    if merged_degree == 4 and not cut:
        return FlexibilityVerdict(
            subject_kind="edge",
            subject=eid,
            verdict=True,
            rule=CONDITION_I,
            subgraph=global_sub,
            cut_edge=cut,
            merged_degree=merged_degree,
        )

    local_sub = edge_local_subgraph(g, eid)
    connected = local_sub.is_connected()
    if merged_degree >= 4 and connected:
        return FlexibilityVerdict(
            subject_kind="edge",
            subject=eid,
            verdict=True,
            rule=CONDITION_II,
            subgraph=local_sub,
            connected=connected,
            merged_degree=merged_degree,
        )

    return FlexibilityVerdict(
        subject_kind="edge",
        subject=eid,
        verdict=False,
        rule=NO_RULE,
        subgraph=local_sub,
        connected=connected,
        cut_edge=cut,
        merged_degree=merged_degree,
    )


def all_split_specs(
    g: MultiGraph, v: int, *, include_loop_splits: bool = False
) -> list[SplitSpec]:
    """Every distinct split at v (unordered sides, both non-empty).

    With d edge-ends there are 2^(d-1) - 1 of them; the first end is pinned
    to side A to quotient out the side swap.  Loop-carrying vertices yield
    nothing unless include_loop_splits is set.
    """
    ends = g.edge_ends_at(v)
    if g.degree(v) < 4:
        return []
    if not include_loop_splits and any(g.is_loop(eid) for eid, _ in ends):
        return []
    first, rest = ends[0], ends[1:]
    specs = []
    for mask in range(0, 1 << len(rest)):
        side_a = {first} | {rest[i] for i in range(len(rest)) if mask >> i & 1}
        if len(side_a) == len(ends):
            continue
        specs.append(SplitSpec(vertex=v, side_a=frozenset(side_a)))
    return specs
