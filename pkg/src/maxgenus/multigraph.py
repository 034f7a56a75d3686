"""Undirected multigraph with loops and parallel edges.

Every graph in this package is a :class:`MultiGraph` value: an immutable set
of vertex ids plus a table of edges, where an edge is an id attached to an
unordered endpoint pair and ``u == w`` encodes a loop.  Ids are opaque
non-negative integers, never reused within one graph value, and survive all
non-mutating queries, so a transformation of a graph can report exactly which
edge went where.

Degree counts a loop twice.  The neighborhood ``neighbors(v)`` never contains
``v`` itself, so a loop contributes nothing to the subgraph induced by the
neighborhood (``local_subgraph``); see the package README for why that
convention is the sane one for vertex splitting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DisconnectedGraphError,
    GraphConstructionError,
    UnknownEdgeError,
    UnknownVertexError,
)


@dataclass(frozen=True)
class Component:
    """One connected piece: its vertices and the edge ids living inside it."""

    vertices: frozenset[int]
    edges: frozenset[int]

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ComponentPartition:
    """All connected components of a graph, ordered by smallest vertex id."""

    components: tuple[Component, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    @property
    def edge_counts(self) -> tuple[int, ...]:
        return tuple(c.edge_count for c in self.components)


class MultiGraph:
    """Immutable undirected multigraph.

    Construct with :meth:`build` (counts vertices 0..n-1, ids edges in input
    order) or :meth:`from_parts` (explicit vertex and edge ids, as needed by
    parsers and induced subgraphs).  All queries are pure; transformations
    live in :mod:`maxgenus.transforms` and return new values.
    """

    __slots__ = ("_vertices", "_vset", "_edges", "_emap", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int, int]]):
        vs = sorted(set(vertices))
        vset = frozenset(vs)
        if len(vs) != len(vset):
            raise GraphConstructionError("duplicate vertex ids")
        if any(v < 0 for v in vs):
            raise GraphConstructionError("vertex ids must be non-negative")
        emap: dict[int, tuple[int, int]] = {}
        for eid, u, w in edges:
            if eid in emap:
                raise GraphConstructionError(f"duplicate edge id {eid}")
            if u not in vset or w not in vset:
                raise GraphConstructionError(
                    f"edge {eid} references undeclared vertex ({u},{w})"
                )
            emap[eid] = (u, w)
        object.__setattr__(self, "_vertices", tuple(vs))
        object.__setattr__(self, "_vset", vset)
        object.__setattr__(
            self, "_edges", tuple((eid,) + emap[eid] for eid in sorted(emap))
        )
        object.__setattr__(self, "_emap", emap)
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vs}
        for eid, u, w in self._edges:
            adj[u].append((eid, w))
            if u != w:
                adj[w].append((eid, u))
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_hash", None)

    # -- construction ------------------------------------------------------

    @classmethod
    def build(cls, vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> MultiGraph:
        """Graph on vertices 0..vertex_count-1; edge ids follow input order.

        A dangling endpoint raises :class:`GraphConstructionError` naming the
        offending edge index.
        """
        vs = range(vertex_count)
        edges = []
        for i, (u, w) in enumerate(edge_list):
            if not (0 <= u < vertex_count and 0 <= w < vertex_count):
                raise GraphConstructionError(
                    f"edge #{i} endpoint ({u},{w}) outside 0..{vertex_count - 1}"
                )
            edges.append((i, u, w))
        return cls(vs, edges)

    @classmethod
    def from_parts(
        cls, vertices: Iterable[int], edges: Iterable[tuple[int, int, int]]
    ) -> MultiGraph:
        """Graph with explicit vertex ids and (edge id, u, w) triples."""
        return cls(vertices, edges)

    # -- basic accessors ----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return self._vset

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Edges as (id, u, w) triples, ascending by id."""
        return self._edges

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self._edges)

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._vset

    def has_edge(self, eid: int) -> bool:
        return eid in self._emap

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._emap[eid]
        except KeyError:
            raise UnknownEdgeError(f"no edge with id {eid}") from None

    def is_loop(self, eid: int) -> bool:
        u, w = self.endpoints(eid)
        return u == w

    def _require_vertex(self, v: int) -> None:
        if v not in self._vset:
            raise UnknownVertexError(f"no vertex with id {v}")

    # -- structural queries --------------------------------------------------

    def degree(self, v: int) -> int:
        """Number of edge-ends at v; a loop contributes 2."""
        self._require_vertex(v)
        deg = 0
        for eid, other in self._adj[v]:
            deg += 2 if other == v else 1
        return deg

    def neighbors(self, v: int) -> frozenset[int]:
        """Distinct vertices sharing a non-loop edge with v (v itself excluded)."""
        self._require_vertex(v)
        return frozenset(other for _, other in self._adj[v] if other != v)

    def edge_ends_at(self, v: int) -> tuple[tuple[int, int], ...]:
        """The edge-ends at v as (edge id, end index) pairs.

        End index 0/1 selects the first/second slot of the stored endpoint
        pair; a loop at v owns both ends.  Order is ascending (id, end).
        """
        self._require_vertex(v)
        ends = []
        for eid, u, w in self._edges:
            if u == v:
                ends.append((eid, 0))
            if w == v:
                ends.append((eid, 1))
        return tuple(ends)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._require_vertex(v)
        return tuple(sorted({eid for eid, _ in self._adj[v]}))

    def induced_subgraph(self, s: Iterable[int]) -> MultiGraph:
        """Subgraph on vertex set s with every edge of self lying inside s.

        Edge ids are retained.  Vertices in s missing from the graph raise.
        """
        sset = frozenset(s)
        for v in sset:
            self._require_vertex(v)
        edges = [
            (eid, u, w) for eid, u, w in self._edges if u in sset and w in sset
        ]
        return MultiGraph(sset, edges)

    def local_subgraph(self, v: int) -> MultiGraph:
        """Subgraph induced by the neighborhood of v (v itself excluded)."""
        return self.induced_subgraph(self.neighbors(v))

    def components(self) -> ComponentPartition:
        """Connected components; isolated vertices form edge-count-0 pieces."""
        seen: set[int] = set()
        comps: list[Component] = []
        for start in self._vertices:
            if start in seen:
                continue
            stack = [start]
            seen.add(start)
            verts = {start}
            while stack:
                x = stack.pop()
                for _, other in self._adj[x]:
                    if other not in seen:
                        seen.add(other)
                        verts.add(other)
                        stack.append(other)
            edges = frozenset(
                eid for eid, u, w in self._edges if u in verts
            )
            comps.append(Component(frozenset(verts), edges))
        return ComponentPartition(tuple(comps))

    def is_connected(self) -> bool:
        """True for non-empty graphs with exactly one component."""
        return len(self._vertices) > 0 and len(self.components()) == 1

    def is_cut_edge(self, eid: int) -> bool:
        """True iff deleting the edge increases the component count.

        Loops and members of parallel classes lie on cycles, hence never cut.
        """
        u, w = self.endpoints(eid)
        if u == w:
            return False
        # reachability u -> w without eid
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for other_eid, other in self._adj[x]:
                if other_eid == eid:
                    continue
                if other not in seen:
                    if other == w:
                        return False
                    seen.add(other)
                    stack.append(other)
        return True

    def betti(self) -> int:
        """Cycle rank |E| - |V| + 1 of a connected graph."""
        if not self.is_connected():
            raise DisconnectedGraphError("betti is defined for connected graphs")
        return self.size - self.order + 1

    def is_locally_connected(self) -> bool:
        """True iff every vertex has a connected, non-empty local subgraph."""
        return all(self.local_subgraph(v).is_connected() for v in self._vertices)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self._vertices), default=0)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self._vertices), default=0)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vset == other._vset and self._edges == other._edges

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self._vset, self._edges))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"MultiGraph(|V|={self.order}, |E|={self.size})"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiGraph is immutable")


def build(vertex_count: int, edge_list: Iterable[tuple[int, int]]) -> MultiGraph:
    """Module-level alias for :meth:`MultiGraph.build`."""
    return MultiGraph.build(vertex_count, edge_list)
