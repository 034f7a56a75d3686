"""Pure-Python spanning-tree enumeration kernel.

This module is the reference implementation of the package's one hot loop:
walking every spanning tree of a small multigraph and scoring each tree by
the number of odd-size components its co-tree splits into.  A compiled twin
(maxgenus._speedups) implements the same two entry points with identical
semantics and identical enumeration order; maxgenus.kernel picks one at
import time.

Interface contract (shared with the compiled twin):

* Vertices are 0..n-1.  Edges arrive as two parallel sequences ``eu``/``ev``
  of endpoint ids; position in those sequences is the edge's identity, and
  positions must be sorted by the caller's public edge ids so that
  enumeration order is reproducible.  ``eu[i] == ev[i]`` encodes a loop.
* Enumeration order: candidates (non-loop positions) are decided in
  ascending position order, the include-branch before the exclude-branch.
  Every spanning tree is produced exactly once.
* ``scan_deficiency`` returns ``(best, witness, scanned, exhausted)`` where
  ``best`` is the minimum odd-component count over the trees examined,
  ``witness`` is the first tree attaining it (sorted tuple of positions),
  ``scanned`` counts examined trees and ``exhausted`` tells whether the walk
  covered every tree or stopped early because ``best <= stop_at``.

The walk prunes exclude-branches that would disconnect the remaining graph,
so every leaf of the search is a spanning tree and the total cost is
O((V+E) * #trees).  Odd-component counts are maintained incrementally in a
rollback union-find over co-tree edges, so a leaf costs O(remaining edges)
rather than a full recount.
"""

from __future__ import annotations

from typing import Iterator, Sequence

COMPILED = False

_MAX_CANDIDATES = 400  # recursion depth bound; far beyond any sane enumeration


def _check_input(n: int, eu: Sequence[int], ev: Sequence[int]) -> list[int]:
    if n <= 0:
        raise ValueError("vertex count must be positive")
    if len(eu) != len(ev):
        raise ValueError("endpoint arrays differ in length")
    cand = [i for i in range(len(eu)) if eu[i] != ev[i]]
    if len(cand) > _MAX_CANDIDATES:
        raise ValueError(f"too many candidate edges ({len(cand)}) to enumerate")
    # reachability of all n vertices through the non-loop edges
    adj: list[list[int]] = [[] for _ in range(n)]
    for i in cand:
        adj[eu[i]].append(ev[i])
        adj[ev[i]].append(eu[i])
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = 1
                reached += 1
                stack.append(y)
    if reached != n:
        raise ValueError("graph is not connected")
    return cand


class _Walk:
    """Shared state for one enumeration walk (tree UF + co-tree parity UF)."""

    def __init__(self, n: int, eu: Sequence[int], ev: Sequence[int]):
        self.eu = list(eu)
        self.ev = list(ev)
        self.n = n
        self.cand = _check_input(n, eu, ev)
        # tree union-find (no path compression: must roll back)
        self.tparent = list(range(n))
        self.tsize = [1] * n
        # co-tree union-find with per-root edge parity
        self.cparent = list(range(n))
        self.csize = [1] * n
        self.cparity = [0] * n
        self.odd = 0
        self.included: list[int] = []
        # loops are co-tree in every branch: seed their parity once
        for i in range(len(eu)):
            if eu[i] == ev[i]:
                self.cotree_add(eu[i], ev[i])

    def tfind(self, x: int) -> int:
        p = self.tparent
        while p[x] != x:
            x = p[x]
        return x

    def cfind(self, x: int) -> int:
        p = self.cparent
        while p[x] != x:
            x = p[x]
        return x

    def tree_union(self, ru: int, rw: int) -> tuple[int, int]:
        if self.tsize[ru] < self.tsize[rw]:
            ru, rw = rw, ru
        self.tparent[rw] = ru
        self.tsize[ru] += self.tsize[rw]
        return ru, rw

    def tree_undo(self, ru: int, rw: int) -> None:
        self.tparent[rw] = rw
        self.tsize[ru] -= self.tsize[rw]

    def cotree_add(self, u: int, w: int) -> tuple:
        """Account one co-tree edge; returns an undo token."""
        ru = self.cfind(u)
        rw = self.cfind(w)
        if ru == rw:
            old = self.cparity[ru]
            self.cparity[ru] = old ^ 1
            self.odd += 1 if old == 0 else -1
            return (0, ru, old)
        if self.csize[ru] < self.csize[rw]:
            ru, rw = rw, ru
        pu, pw = self.cparity[ru], self.cparity[rw]
        self.cparent[rw] = ru
        self.csize[ru] += self.csize[rw]
        merged = pu ^ pw ^ 1
        self.cparity[ru] = merged
        self.odd += merged - pu - pw
        return (1, ru, rw, pu, pw)

    def cotree_undo(self, token: tuple) -> None:
        if token[0] == 0:
            _, ru, old = token
            self.odd += 1 if old == 1 else -1
            self.cparity[ru] = old
        else:
            _, ru, rw, pu, pw = token
            self.odd += pu + pw - self.cparity[ru]
            self.cparity[ru] = pu
            self.csize[ru] -= self.csize[rw]
            self.cparent[rw] = rw

    def exclude_viable(self, idx: int) -> bool:
        """May cand[idx] be dropped: are its endpoints still connected by
        the included edges plus the undecided candidates after idx?"""
        eu, ev, cand = self.eu, self.ev, self.cand
        u = eu[cand[idx]]
        w = ev[cand[idx]]
        n = self.n
        adj: list[list[int]] = [[] for _ in range(n)]
        for pos in self.included:
            adj[eu[pos]].append(ev[pos])
            adj[ev[pos]].append(eu[pos])
        for j in range(idx + 1, len(cand)):
            pos = cand[j]
            adj[eu[pos]].append(ev[pos])
            adj[ev[pos]].append(eu[pos])
        seen = bytearray(n)
        seen[u] = 1
        stack = [u]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y == w:
                    return True
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
        return False


def iter_trees(n: int, eu: Sequence[int], ev: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every spanning tree as a sorted tuple of edge positions."""
    walk = _Walk(n, eu, ev)
    cand = walk.cand
    eu_l, ev_l = walk.eu, walk.ev
    target = n - 1

    def rec(i: int, chosen: int) -> Iterator[tuple[int, ...]]:
        if chosen == target:
            yield tuple(walk.included)
            return
        pos = cand[i]
        ru = walk.tfind(eu_l[pos])
        rw = walk.tfind(ev_l[pos])
        if ru == rw:
            yield from rec(i + 1, chosen)
            return
        ru, rw = walk.tree_union(ru, rw)
        walk.included.append(pos)
        yield from rec(i + 1, chosen + 1)
        walk.included.pop()
        walk.tree_undo(ru, rw)
        if walk.exclude_viable(i):
            yield from rec(i + 1, chosen)

    yield from rec(0, 0)


def scan_deficiency(
    n: int,
    eu: Sequence[int],
    ev: Sequence[int],
    stop_at: int,
) -> tuple[int, tuple[int, ...], int, bool]:
    """Minimum odd co-tree component count over all spanning trees.

    Stops early once a tree with count <= stop_at is seen (pass -1 to force
    a full sweep).  The witness is the first tree attaining the reported
    minimum, in enumeration order.
    """
    walk = _Walk(n, eu, ev)
    cand = walk.cand
    eu_l, ev_l = walk.eu, walk.ev
    target = n - 1
    m = len(cand)
    best = n + len(eu) + 1
    witness: tuple[int, ...] = ()
    scanned = 0

    def leaf(i: int) -> bool:
        """Close out one spanning tree; True means stop the whole walk."""
        nonlocal best, witness, scanned
        tokens = []
        for j in range(i, m):
            pos = cand[j]
            tokens.append(walk.cotree_add(eu_l[pos], ev_l[pos]))
        xi = walk.odd
        scanned += 1
        if xi < best:
            best = xi
            witness = tuple(walk.included)
        for token in reversed(tokens):
            walk.cotree_undo(token)
        return best <= stop_at

    def rec(i: int, chosen: int) -> bool:
        if chosen == target:
            return leaf(i)
        pos = cand[i]
        ru = walk.tfind(eu_l[pos])
        rw = walk.tfind(ev_l[pos])
        if ru == rw:
            token = walk.cotree_add(eu_l[pos], ev_l[pos])
            done = rec(i + 1, chosen)
            walk.cotree_undo(token)
            return done
        ru, rw = walk.tree_union(ru, rw)
        walk.included.append(pos)
        done = rec(i + 1, chosen + 1)
        walk.included.pop()
        walk.tree_undo(ru, rw)
        if done:
            return True
        if walk.exclude_viable(i):
            token = walk.cotree_add(eu_l[pos], ev_l[pos])
            done = rec(i + 1, chosen)
            walk.cotree_undo(token)
            return done
        return False

    stopped = rec(0, 0)
    return best, witness, scanned, not stopped
