"""Flexible-edge reduction and upper-embeddable family generation.

Contracting a flexible edge (see maxgenus.transforms) preserves the
upper-embeddability verdict in both directions, so a graph can be shrunk to
an irreducible *flexible weak minor* first and the expensive exact check run
on the smaller graph.  The reducer always contracts the lowest-id flexible
edge; different orders may reach different irreducible graphs, which
``explore_orders`` surfaces empirically on small inputs.  Every run returns a
trace that can be replayed and re-certified step by step.

Going the other way, splitting flexible vertices grows graphs while keeping
them upper embeddable.  ``generate_family`` closes a seed (typically a
bouquet of circles) under all type-I and type-II splits breadth-first,
deduplicating by canonical form, and re-verifies every member against the
exact oracle rather than trusting the preservation theorems it exists to
exercise.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import genus
from .errors import MaxgenusError, PreconditionError
from .isomorphism import canonical_key
from .multigraph import MultiGraph
from .transforms import (
    NO_RULE,
    TYPE_I,
    TYPE_II,
    SplitSpec,
    all_split_specs,
    contract_edge,
    is_flexible_edge,
    is_type1_flexible,
    is_type2_flexible_split,
    split_vertex,
)


@dataclass(frozen=True)
class ReductionStep:
    edge: int  # id in the graph this step was applied to
    rule: str  # condition-I or condition-II
    id_map: dict[int, int]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    initial_order: int
    final_order: int

    def as_dict(self) -> dict:
        return {
            "initial_order": self.initial_order,
            "final_order": self.final_order,
            "steps": [
                {
                    "edge": s.edge,
                    "rule": s.rule,
                    "id_map": {str(k): v for k, v in s.id_map.items()},
                }
                for s in self.steps
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, obj: dict) -> ReductionTrace:
        steps = tuple(
            ReductionStep(
                edge=int(s["edge"]),
                rule=s["rule"],
                id_map={int(k): int(v) for k, v in s["id_map"].items()},
            )
            for s in obj["steps"]
        )
        return cls(
            steps=steps,
            initial_order=int(obj["initial_order"]),
            final_order=int(obj["final_order"]),
        )

    @classmethod
    def from_json(cls, text: str) -> ReductionTrace:
        return cls.from_dict(json.loads(text))


def lowest_flexible_edge(g: MultiGraph):
    """First edge (ascending id) whose contraction is verdict-preserving."""
    for eid in g.edge_ids():
        if g.is_loop(eid):
            continue
        verdict = is_flexible_edge(g, eid)
        if verdict.verdict:
            return eid, verdict.rule
    return None


def flexible_weak_minor(g: MultiGraph) -> tuple[MultiGraph, ReductionTrace]:
    """Contract lowest-id flexible edges until none remain.

    Each step removes one vertex, so at most |V|-1 steps run.  A graph with
    no flexible edge comes back unchanged with an empty trace.
    """
    if not g.is_connected():
        raise PreconditionError("reduction requires a connected graph")
    current = g
    steps: list[ReductionStep] = []
    while True:
        found = lowest_flexible_edge(current)
        if found is None:
            break
        eid, rule = found
        current, id_map = contract_edge(current, eid)
        steps.append(ReductionStep(edge=eid, rule=rule, id_map=id_map))
    trace = ReductionTrace(
        steps=tuple(steps), initial_order=g.order, final_order=current.order
    )
    return current, trace


def verify_trace(g: MultiGraph, trace: ReductionTrace) -> bool:
    """Replay a trace, re-certifying each step's flexibility and rule tag."""
    if g.order != trace.initial_order:
        return False
    current = g
    for step in trace.steps:
        if not current.has_edge(step.edge) or current.is_loop(step.edge):
            return False
        verdict = is_flexible_edge(current, step.edge)
        if not verdict.verdict or verdict.rule != step.rule:
            return False
        current, id_map = contract_edge(current, step.edge)
        if id_map != step.id_map:
            return False
    return current.order == trace.final_order


@dataclass(frozen=True)
class ReducedVerdict:
    """Outcome of check-after-reduction, with the cost ratio it bought."""

    report: genus.GenusReport  # exact report of the reduced graph
    trace: ReductionTrace
    initial_order: int
    reduced_order: int
    tree_count_input: int
    tree_count_reduced: int

    @property
    def upper_embeddable(self) -> bool:
        return bool(self.report.upper_embeddable)

    @property
    def speedup(self) -> float:
        return self.tree_count_input / max(1, self.tree_count_reduced)


def check_reduced(
    g: MultiGraph, *, max_edges: int = genus.DEFAULT_EDGE_CAP
) -> ReducedVerdict:
    """Reduce first, then decide upper embeddability exactly on the result.

    The verdict (and beta) transfer to the input graph; xi and max_genus in
    the report are those of the reduced graph, which coincide with the
    input's whenever the verdict is positive.
    """
    reduced, trace = flexible_weak_minor(g)
    report = genus.max_genus(reduced, max_edges=max_edges, mode=genus.EXACT)
    return ReducedVerdict(
        report=report,
        trace=trace,
        initial_order=g.order,
        reduced_order=reduced.order,
        tree_count_input=genus.spanning_tree_count(g),
        tree_count_reduced=genus.spanning_tree_count(reduced),
    )


_EXPLORE_EDGE_LIMIT = 14


def explore_orders(g: MultiGraph) -> tuple[int, ...]:
    """Orders of all irreducible graphs reachable by any contraction order.

    Exponential; refused beyond a small edge count.  Used to observe how
    far the reduction is from confluent on concrete inputs.
    """
    if g.size > _EXPLORE_EDGE_LIMIT:
        raise PreconditionError(
            f"order exploration is limited to {_EXPLORE_EDGE_LIMIT} edges "
            f"(got {g.size})"
        )
    seen: set = set()
    orders: set[int] = set()

    def walk(h: MultiGraph) -> None:
        key = canonical_key(h)
        if key in seen:
            return
        seen.add(key)
        flexible = [
            eid
            for eid in h.edge_ids()
            if not h.is_loop(eid) and is_flexible_edge(h, eid).verdict
        ]
        if not flexible:
            orders.add(h.order)
            return
        for eid in flexible:
            child, _ = contract_edge(h, eid)
            walk(child)

    walk(g)
    return tuple(sorted(orders))


# -- family generation -----------------------------------------------------------


@dataclass(frozen=True)
class FamilyNode:
    graph: MultiGraph
    parent: int | None  # index into the family list
    split: SplitSpec | None
    rule: str  # TYPE_I/TYPE_II for children, "seed" for the root
    depth: int


@dataclass(frozen=True)
class FamilyResult:
    nodes: tuple[FamilyNode, ...]
    truncated: bool  # a budget stopped the closure before it was complete

    def counts_per_depth(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for node in self.nodes:
            out[node.depth] = out.get(node.depth, 0) + 1
        return out


_DEDUP_ORDER_LIMIT = 10


def _flexible_splits(g: MultiGraph, rules: tuple[str, ...]):
    """All (spec, rule) pairs whose split provably preserves the verdict."""
    out = []
    for v in g.vertices:
        if g.degree(v) < 4:
            continue
        type1 = TYPE_I in rules and is_type1_flexible(g, v).verdict
        for spec in all_split_specs(g, v, include_loop_splits=True):
            if type1:
                out.append((spec, TYPE_I))
            elif TYPE_II in rules and g.degree(v) == 4:
                check = is_type2_flexible_split(g, spec, allow_loops=True)
                if check.verdict:
                    out.append((spec, TYPE_II))
    return out


def generate_family(
    seed: MultiGraph,
    max_vertices: int,
    max_graphs: int,
    rules: tuple[str, ...] = (TYPE_I, TYPE_II),
    *,
    max_edges: int = genus.DEFAULT_EDGE_CAP,
    workers: int = 1,
) -> FamilyResult:
    """Breadth-first closure of a seed under flexible vertex splittings.

    Members are deduplicated by canonical form up to 10 vertices (larger
    graphs are admitted unmerged: over-counting, never a wrong admission)
    and every admission is re-verified upper embeddable by the exact oracle.
    Admission order is deterministic and independent of the worker count.
    """
    bad = set(rules) - {TYPE_I, TYPE_II}
    if bad:
        raise ValueError(f"unknown rules {sorted(bad)}")
    if max_vertices < seed.order or max_graphs < 1:
        raise ValueError("budgets must admit at least the seed")
    if not genus.is_upper_embeddable(seed, max_edges=max_edges):
        raise PreconditionError("seed graph is not upper embeddable")

    nodes: list[FamilyNode] = [
        FamilyNode(graph=seed, parent=None, split=None, rule="seed", depth=0)
    ]
    seen_keys = {canonical_key(seed)} if seed.order <= _DEDUP_ORDER_LIMIT else set()
    truncated = False
    frontier = [0]

    while frontier and not truncated:
        expansions = _expand_frontier([nodes[i] for i in frontier], rules, workers)
        next_frontier: list[int] = []
        for parent_index, batch in zip(frontier, expansions):
            for spec, rule, child in batch:
                if child.order > max_vertices:
                    truncated = True
                    continue
                if child.order <= _DEDUP_ORDER_LIMIT:
                    key = canonical_key(child)
                    if key in seen_keys:
                        continue
                    seen_keys.add(key)
                if len(nodes) >= max_graphs:
                    truncated = True
                    break
                if not genus.is_upper_embeddable(child, max_edges=max_edges):
                    raise MaxgenusError(
                        f"family member failed verification: split {spec} "
                        f"({rule}) of node {parent_index} is not upper "
                        f"embeddable"
                    )
                nodes.append(
                    FamilyNode(
                        graph=child,
                        parent=parent_index,
                        split=spec,
                        rule=rule,
                        depth=nodes[parent_index].depth + 1,
                    )
                )
                next_frontier.append(len(nodes) - 1)
            if truncated and len(nodes) >= max_graphs:
                break
        frontier = next_frontier
    return FamilyResult(nodes=tuple(nodes), truncated=truncated)


def _expand_frontier(
    frontier_nodes: list[FamilyNode], rules: tuple[str, ...], workers: int
):
    """Child candidates per frontier node, in deterministic order."""

    def expand(node: FamilyNode):
        out = []
        for spec, rule in _flexible_splits(node.graph, rules):
            result = split_vertex(node.graph, spec, allow_loops=True)
            out.append((spec, rule, result.graph))
        return out

    if workers <= 1:
        return [expand(node) for node in frontier_nodes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(expand, frontier_nodes))
