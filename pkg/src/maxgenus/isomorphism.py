"""Exact multigraph isomorphism via canonical labeling.

Color refinement (degrees, loop counts, then iterated neighbor-color
multisets with edge multiplicities) followed by backtracking
individualization: every vertex of the first ambiguous color class is tried,
and the lexicographically smallest fully-labeled edge encoding wins.  That
minimum is independent of the input labeling, so it serves as a canonical
form.  Intended for the small graphs this package deduplicates (around ten
vertices); cost grows quickly beyond that.
"""

from __future__ import annotations

from collections import Counter

from .multigraph import MultiGraph


def _refine(colors: dict[int, int], mult: dict[int, Counter]) -> dict[int, int]:
    """Iterate neighbor-color-multiset splitting until the partition is stable."""
    while True:
        signatures = {
            v: (
                colors[v],
                tuple(sorted((colors[u], m) for u, m in mult[v].items())),
            )
            for v in colors
        }
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        new = {v: ranks[signatures[v]] for v in colors}
        if len(set(new.values())) == len(set(colors.values())):
            return new
        colors = new


def _encode(colors: dict[int, int], g: MultiGraph) -> tuple:
    """Edge multiset under the labeling induced by a discrete coloring."""
    rank = {v: colors[v] for v in colors}
    pairs = []
    for _, u, w in g.edges:
        a, b = rank[u], rank[w]
        pairs.append((a, b) if a <= b else (b, a))
    return tuple(sorted(pairs))


def canonical_key(g: MultiGraph) -> tuple:
    """Hashable value equal for two graphs iff they are isomorphic."""
    verts = g.vertices
    n = len(verts)
    if n == 0:
        return (0, ())
    mult: dict[int, Counter] = {v: Counter() for v in verts}
    loops = {v: 0 for v in verts}
    for _, u, w in g.edges:
        if u == w:
            loops[u] += 1
        else:
            mult[u][w] += 1
            mult[w][u] += 1
    base = {
        v: (g.degree(v), loops[v]) for v in verts
    }
    ranks = {sig: i for i, sig in enumerate(sorted(set(base.values())))}
    colors = _refine({v: ranks[base[v]] for v in verts}, mult)

    best: list[tuple | None] = [None]

    def search(colors: dict[int, int]) -> None:
        classes: dict[int, list[int]] = {}
        for v, c in colors.items():
            classes.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            enc = _encode(colors, g)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        fresh = max(colors.values()) + 1
        for v in target:
            branched = dict(colors)
            branched[v] = fresh
            search(_refine(branched, mult))

    search(colors)
    assert best[0] is not None
    return (n, best[0])


def is_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    inv1 = sorted(g1.degree(v) for v in g1.vertices)
    inv2 = sorted(g2.degree(v) for v in g2.vertices)
    if inv1 != inv2:
        return False
    return canonical_key(g1) == canonical_key(g2)
