"""Deficiency, maximum genus and upper embeddability.

The machinery rests on one classical fact: for a connected graph, the
maximum genus is (beta - xi) / 2, where beta is the cycle rank and xi is the
minimum, over all spanning trees T, of the number of components of G - E(T)
with an odd number of edges.  A graph is upper embeddable exactly when
xi <= 1, i.e. when it has a *splitting tree* whose co-tree leaves at most one
odd component.

xi is computed exactly by exhaustive spanning-tree enumeration.  Two
shortcuts keep that honest but fast: every tree's deficiency has the parity
of beta, so the sweep may stop as soon as it reaches that parity floor, and
an upper-embeddability query may stop at the first tree with deficiency <= 1.
Enumeration refuses graphs above an explicit edge cap (default 30); callers
must raise the cap deliberately.  For graphs beyond the cap there is a
seeded stochastic descent giving an upper bound on xi (never presented as
exact anywhere in the package).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from . import kernel
from .errors import (
    DisconnectedGraphError,
    GuardExceededError,
    NotSpanningTreeError,
    PreconditionError,
)
from .multigraph import MultiGraph

DEFAULT_EDGE_CAP = 30

EXACT = "exact"
HEURISTIC = "heuristic"


@dataclass(frozen=True)
class DeficiencyReport:
    """Deficiency of one spanning tree: its odd co-tree component count."""

    tree: frozenset[int]
    xi_of_tree: int
    component_edge_counts: tuple[int, ...]  # descending, edge-bearing pieces only


@dataclass(frozen=True)
class GenusReport:
    betti: int
    xi: int
    max_genus: int
    upper_embeddable: bool | None  # None: undecided (heuristic mode, bound > 1)
    witness: frozenset[int] | None
    mode: str  # EXACT or HEURISTIC

    def as_dict(self) -> dict:
        return {
            "betti": self.betti,
            "xi": self.xi,
            "max_genus": self.max_genus,
            "upper_embeddable": self.upper_embeddable,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "mode": self.mode,
        }


# -- plumbing -----------------------------------------------------------------


def _require_connected(g: MultiGraph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("operation requires a connected graph")


def _require_under_cap(g: MultiGraph, max_edges: int) -> None:
    if g.size > max_edges:
        raise GuardExceededError(g.size, max_edges)


def _compact(g: MultiGraph) -> tuple[int, list[int], list[int], tuple[int, ...]]:
    """Kernel view: vertices renumbered 0..n-1, edges as position-indexed arrays."""
    vidx = {v: i for i, v in enumerate(g.vertices)}
    eids = g.edge_ids()
    eu = []
    ev = []
    for eid in eids:
        u, w = g.endpoints(eid)
        eu.append(vidx[u])
        ev.append(vidx[w])
    return len(g.vertices), eu, ev, eids


def check_spanning_tree(g: MultiGraph, tree: frozenset[int]) -> None:
    """Raise NotSpanningTreeError unless tree is a spanning tree of g."""
    if len(tree) != g.order - 1:
        raise NotSpanningTreeError(
            f"{len(tree)} edges cannot span {g.order} vertices"
        )
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for eid in sorted(tree):
        if not g.has_edge(eid):
            raise NotSpanningTreeError(f"edge {eid} is not in the graph")
        u, w = g.endpoints(eid)
        if u == w:
            raise NotSpanningTreeError(f"edge {eid} is a loop")
        ru, rw = find(u), find(w)
        if ru == rw:
            raise NotSpanningTreeError(f"edge {eid} closes a cycle")
        parent[ru] = rw
    # |tree| = |V|-1 and acyclic => spanning


# -- enumeration --------------------------------------------------------------


def spanning_trees(
    g: MultiGraph, *, max_edges: int = DEFAULT_EDGE_CAP
) -> Iterator[frozenset[int]]:
    """Every spanning tree exactly once, as edge-id sets, deterministic order.

    Candidates are decided ascending by edge id with the include branch
    first, so reruns and the compiled scan agree on ordering.
    """
    _require_connected(g)
    _require_under_cap(g, max_edges)
    n, eu, ev, eids = _compact(g)
    for positions in kernel.iter_trees(n, eu, ev):
        yield frozenset(eids[i] for i in positions)


def spanning_tree_count(g: MultiGraph) -> int:
    """Exact number of spanning trees via the Kirchhoff determinant.

    Integer fraction-free elimination, so counts never lose precision.
    Loops do not affect the count; parallel edges multiply it.
    """
    _require_connected(g)
    n = g.order
    if n == 1:
        return 1
    vidx = {v: i for i, v in enumerate(g.vertices)}
    lap = [[0] * n for _ in range(n)]
    for _, u, w in g.edges:
        if u == w:
            continue
        iu, iw = vidx[u], vidx[w]
        lap[iu][iu] += 1
        lap[iw][iw] += 1
        lap[iu][iw] -= 1
        lap[iw][iu] -= 1
    minor = [row[1:] for row in lap[1:]]
    return _int_det(minor)


def _int_det(mat: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


# -- deficiency ---------------------------------------------------------------


def deficiency(g: MultiGraph, tree: frozenset[int]) -> DeficiencyReport:
    """Odd component count of the co-tree graph (all vertices kept)."""
    _require_connected(g)
    check_spanning_tree(g, tree)
    cotree = [e for e in g.edge_ids() if e not in tree]
    counts = _cotree_component_counts(g, cotree)
    return DeficiencyReport(
        tree=frozenset(tree),
        xi_of_tree=sum(1 for c in counts if c % 2 == 1),
        component_edge_counts=counts,
    )


def _cotree_component_counts(g: MultiGraph, cotree: list[int]) -> tuple[int, ...]:
    parent = {v: v for v in g.vertices}
    weight = {v: 0 for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for eid in cotree:
        u, w = g.endpoints(eid)
        ru, rw = find(u), find(w)
        if ru == rw:
            weight[ru] += 1
        else:
            parent[rw] = ru
            weight[ru] += weight[rw] + 1
    counts = [weight[v] for v in g.vertices if find(v) == v and weight[v] > 0]
    return tuple(sorted(counts, reverse=True))


def _odd_count(g: MultiGraph, tree: frozenset[int]) -> int:
    cotree = [e for e in g.edge_ids() if e not in tree]
    return sum(1 for c in _cotree_component_counts(g, cotree) if c % 2 == 1)


# -- exact xi and friends -------------------------------------------------------


def _scan(g: MultiGraph, stop_at: int, max_edges: int):
    _require_connected(g)
    _require_under_cap(g, max_edges)
    n, eu, ev, eids = _compact(g)
    best, positions, scanned, exhausted = kernel.scan_deficiency(n, eu, ev, stop_at)
    witness = frozenset(eids[i] for i in positions)
    return best, witness, scanned, exhausted


def xi(
    g: MultiGraph, *, max_edges: int = DEFAULT_EDGE_CAP
) -> tuple[int, frozenset[int]]:
    """Exact deficiency of the graph, with a witnessing spanning tree.

    Stops at the parity floor (beta mod 2), which no tree can beat.
    """
    floor = g.betti() & 1
    value, witness, _, _ = _scan(g, floor, max_edges)
    return value, witness


def find_splitting_tree(
    g: MultiGraph, *, max_edges: int = DEFAULT_EDGE_CAP
) -> frozenset[int] | None:
    """First spanning tree (enumeration order) with at most one odd co-tree
    component, or None after an exhaustive sweep finds none."""
    best, witness, _, _ = _scan(g, 1, max_edges)
    return witness if best <= 1 else None


def is_upper_embeddable(
    g: MultiGraph, *, max_edges: int = DEFAULT_EDGE_CAP
) -> bool:
    """True iff some spanning tree has deficiency <= 1 (short-circuits)."""
    return find_splitting_tree(g, max_edges=max_edges) is not None


def max_genus(
    g: MultiGraph,
    *,
    max_edges: int = DEFAULT_EDGE_CAP,
    mode: str = "auto",
    budget: int = 2000,
    seed: int = 0,
) -> GenusReport:
    """Full report: beta, xi, maximum genus, upper-embeddability verdict.

    mode "auto" computes exactly when the graph is under the edge cap and
    falls back to the stochastic bound otherwise; "exact"/"heuristic" force
    the choice (exact still honors the cap).  In heuristic mode xi is an
    upper bound (max_genus a lower bound) and upper_embeddable is True only
    when a witness proves it, None when undecided.
    """
    beta = g.betti()
    if mode not in ("auto", EXACT, HEURISTIC):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = EXACT if g.size <= max_edges else HEURISTIC
    if mode == EXACT:
        value, witness = xi(g, max_edges=max_edges)
        return GenusReport(
            betti=beta,
            xi=value,
            max_genus=(beta - value) // 2,
            upper_embeddable=value <= 1,
            witness=witness,
            mode=EXACT,
        )
    value, witness = _heuristic_descent(g, budget, seed)
    return GenusReport(
        betti=beta,
        xi=value,
        max_genus=(beta - value) // 2,
        upper_embeddable=True if value <= 1 else None,
        witness=witness,
        mode=HEURISTIC,
    )


# -- Lemma-style tree rotation ---------------------------------------------------


def retree_around_vertex(
    g: MultiGraph, tree: frozenset[int], v: int
) -> frozenset[int]:
    """Rotate a splitting tree so every neighbor of v is reached directly.

    Given a splitting tree and a vertex v of degree >= 3 whose local
    subgraph is connected, returns a spanning tree containing one v-edge per
    neighbor (the lowest-id edge for parallel classes), produced by repeated
    edge exchange: walk the tree path from v to the neighbor and swap out the
    path's final edge.  The result is again a splitting tree; its deficiency
    never exceeds the input's.
    """
    _require_connected(g)
    if not g.has_vertex(v):
        raise PreconditionError(f"no vertex {v}")
    if g.degree(v) < 3:
        raise PreconditionError(f"degree of {v} is {g.degree(v)}, need >= 3")
    if not g.local_subgraph(v).is_connected():
        raise PreconditionError(f"local subgraph of {v} is not connected")
    check_spanning_tree(g, tree)
    input_xi = _odd_count(g, tree)
    if input_xi > 1:
        raise PreconditionError(
            f"tree is not a splitting tree (deficiency {input_xi})"
        )

    selected: dict[int, int] = {}
    for eid in g.incident_edges(v):
        u, w = g.endpoints(eid)
        if u == w:
            continue
        other = w if u == v else u
        if other not in selected:
            selected[other] = eid  # incident_edges ascends, so lowest id wins

    current = set(tree)
    for neighbor in sorted(selected):
        eid = selected[neighbor]
        if eid in current:
            continue
        path = _tree_path(g, current, v, neighbor)
        current.remove(path[-1])
        current.add(eid)

    result = frozenset(current)
    check_spanning_tree(g, result)
    assert _odd_count(g, result) <= input_xi, "exchange increased deficiency"
    return result


def _tree_path(g: MultiGraph, tree: set[int], src: int, dst: int) -> list[int]:
    """Edge ids along the unique tree path src -> dst."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for eid in tree:
        u, w = g.endpoints(eid)
        adj[u].append((eid, w))
        adj[w].append((eid, u))
    prev: dict[int, tuple[int, int]] = {}
    stack = [src]
    seen = {src}
    while stack:
        x = stack.pop()
        if x == dst:
            break
        for eid, other in adj[x]:
            if other not in seen:
                seen.add(other)
                prev[other] = (eid, x)
                stack.append(other)
    if dst not in seen:
        raise NotSpanningTreeError(f"no tree path from {src} to {dst}")
    path = []
    x = dst
    while x != src:
        eid, x = prev[x]
        path.append(eid)
    path.reverse()
    return path


# -- stochastic upper bound ------------------------------------------------------


def xi_heuristic(g: MultiGraph, budget: int = 2000, seed: int = 0) -> int:
    """Upper bound on xi by seeded local search; same parity as beta.

    Starts from a random spanning tree and performs co-tree edge exchanges,
    accepting moves that do not increase the odd component count.  Exact
    whenever it reaches the parity floor; otherwise just a bound.
    """
    value, _ = _heuristic_descent(g, budget, seed)
    return value


def _heuristic_descent(
    g: MultiGraph, budget: int, seed: int
) -> tuple[int, frozenset[int]]:
    _require_connected(g)
    rng = random.Random(seed)
    floor = g.betti() & 1

    candidates = [e for e in g.edge_ids() if not g.is_loop(e)]
    order = candidates[:]
    rng.shuffle(order)
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    tree: set[int] = set()
    for eid in order:
        u, w = g.endpoints(eid)
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[ru] = rw
            tree.add(eid)

    current = frozenset(tree)
    current_xi = _odd_count(g, current)
    best, best_xi = current, current_xi
    cotree = [e for e in candidates if e not in current]

    for _ in range(budget):
        if best_xi <= floor:
            break
        if not cotree:
            break
        enter = rng.choice(cotree)
        u, w = g.endpoints(enter)
        cycle = _tree_path(g, set(current), u, w)
        leave = rng.choice(cycle)
        trial = frozenset(current - {leave} | {enter})
        trial_xi = _odd_count(g, trial)
        if trial_xi <= current_xi:
            current, current_xi = trial, trial_xi
            cotree = [e for e in candidates if e not in current]
            if current_xi < best_xi:
                best, best_xi = current, current_xi
    return best_xi, best
