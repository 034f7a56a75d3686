"""Built-in graph corpus: parametric families and hand-transcribed figures.

The ``figN_*`` graphs are incidence read-offs from drawings; the label->id
maps are kept next to each edge list so the transcription can be audited.
Structural relations between them (split/contraction lineage) are not assumed
here; the test suite re-derives them through the transforms module.
"""

from __future__ import annotations

from .multigraph import MultiGraph


def bouquet(n: int) -> MultiGraph:
    """Single vertex carrying n loops."""
    if n < 0:
        raise ValueError("loop count must be non-negative")
    return MultiGraph.build(1, [(0, 0)] * n)


def theta() -> MultiGraph:
    """Two vertices joined by three parallel edges."""
    return MultiGraph.build(2, [(0, 1)] * 3)


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k4() -> MultiGraph:
    return complete_graph(4)


def cycle(n: int) -> MultiGraph:
    """Cycle on n vertices; n=1 is a loop, n=2 a pair of parallels."""
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return MultiGraph.build(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> MultiGraph:
    """Rim cycle 0..n-1 (edge ids 0..n-1) plus hub n with spokes (ids n..2n-1)."""
    if n < 3:
        raise ValueError("wheel needs a rim of at least 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n, i) for i in range(n)]
    return MultiGraph.build(n + 1, edges)


# -- figure transcriptions ---------------------------------------------------

# fig1: K4 drawn with one central vertex.
# labels: left=0 right=1 top=2 center=3
FIG1_LABELS = {"left": 0, "right": 1, "top": 2, "center": 3}


def fig1_g() -> MultiGraph:
    return MultiGraph.build(
        4,
        [
            (0, 1),  # 0 left-right
            (0, 3),  # 1 left-center
            (0, 2),  # 2 left-top
            (3, 2),  # 3 center-top (the central vertical edge)
            (3, 1),  # 4 center-right
            (1, 2),  # 5 right-top
        ],
    )


# fig2: fig1 with the central vertical edge contracted (center merged into top).
# labels: left=0 right=1 top=2
def fig2_g1() -> MultiGraph:
    return MultiGraph.build(
        3,
        [
            (0, 1),  # left-right
            (0, 2),  # left-top
            (1, 2),  # right-top
            (2, 0),  # top-left curve
            (2, 1),  # top-right curve
        ],
    )


# fig3: all three edges of a spanning tree of fig1 contracted down to B_3.
def fig3_g2() -> MultiGraph:
    return bouquet(3)


# fig4: 17 vertices, 26 edges; every degree is 3 except deg(v)=4.
# labels: l1..l4 = 0..3, r1..r4 = 4..7, a..h = 8..15, v = 16
FIG4_LABELS = {
    "l1": 0, "l2": 1, "l3": 2, "l4": 3,
    "r1": 4, "r2": 5, "r3": 6, "r4": 7,
    "a": 8, "b": 9, "c": 10, "d": 11,
    "e": 12, "f": 13, "g": 14, "h": 15,
    "v": 16,
}

_FIG4_EDGES = [
    (0, 1),    # 0  l1-l2
    (1, 2),    # 1  l2-l3
    (2, 3),    # 2  l3-l4
    (0, 8),    # 3  l1-a
    (8, 9),    # 4  a-b
    (9, 16),   # 5  b-v
    (3, 11),   # 6  l4-d
    (11, 10),  # 7  d-c
    (10, 16),  # 8  c-v
    (1, 8),    # 9  l2-a
    (2, 11),   # 10 l3-d
    (9, 10),   # 11 b-c
    (0, 4),    # 12 l1-r1
    (4, 5),    # 13 r1-r2
    (5, 6),    # 14 r2-r3
    (6, 7),    # 15 r3-r4
    (3, 7),    # 16 l4-r4
    (4, 12),   # 17 r1-e
    (12, 13),  # 18 e-f
    (13, 16),  # 19 f-v
    (7, 15),   # 20 r4-h
    (15, 14),  # 21 h-g
    (14, 16),  # 22 g-v
    (13, 14),  # 23 f-g
    (12, 5),   # 24 e-r2
    (15, 6),   # 25 h-r3
]


def fig4_g() -> MultiGraph:
    return MultiGraph.build(17, _FIG4_EDGES)


def _fig4_split(side_a_targets: tuple[int, int], side_b_targets: tuple[int, int]) -> MultiGraph:
    # v=16 replaced by v'=17 (side A) and v''=18 (side B); splitting edge id 26.
    # Non-split edges keep their fig4 ids and endpoints.
    reroute = {}
    for eid, u, w in ((5, 9, 16), (8, 10, 16), (19, 13, 16), (22, 14, 16)):
        other = u if w == 16 else w
        new_v = 17 if other in side_a_targets else 18
        reroute[eid] = (other, new_v)
    vertices = [i for i in range(17) if i != 16] + [17, 18]
    edges = []
    for eid, (u, w) in enumerate(_FIG4_EDGES):
        if eid in reroute:
            edges.append((eid,) + reroute[eid])
        else:
            edges.append((eid, u, w))
    edges.append((26, 17, 18))
    return MultiGraph.from_parts(vertices, edges)


def fig5_g1() -> MultiGraph:
    """fig4 with v split so that v' picks up b and f, v'' picks up c and g."""
    return _fig4_split((9, 13), (10, 14))


def fig6_g2() -> MultiGraph:
    """fig4 with v split so that v' picks up b and c, v'' picks up f and g."""
    return _fig4_split((9, 10), (13, 14))


# fig7: two triangles joined by a bridge.
# labels: l_t=0 l_b=1 m1=2 m2=3 r_t=4 r_b=5
FIG7_LABELS = {"l_t": 0, "l_b": 1, "m1": 2, "m2": 3, "r_t": 4, "r_b": 5}


def fig7_g1() -> MultiGraph:
    return MultiGraph.build(
        6,
        [
            (0, 1),  # 0 l_t-l_b
            (2, 0),  # 1 m1-l_t
            (2, 1),  # 2 m1-l_b
            (4, 5),  # 3 r_t-r_b
            (3, 4),  # 4 m2-r_t
            (3, 5),  # 5 m2-r_b
            (2, 3),  # 6 m1-m2 bridge
        ],
    )


def fig8_g() -> MultiGraph:
    """fig7 plus the chord l_t-m2 (edge id 7)."""
    base = fig7_g1()
    edges = list(base.edges) + [(7, 0, 3)]
    return MultiGraph.from_parts(base.vertices, edges)


# fig23: loop at a; triple edge d-e; triangle b,t1,t2; deg(b)=5.
# labels: a=0 b=1 d=2 e=3 t1=4 t2=5
FIG23_LABELS = {"a": 0, "b": 1, "d": 2, "e": 3, "t1": 4, "t2": 5}


def fig23_g() -> MultiGraph:
    return MultiGraph.build(
        6,
        [
            (0, 0),  # 0  loop at a
            (0, 2),  # 1  a-d
            (0, 1),  # 2  a-b
            (2, 3),  # 3  d-e
            (2, 3),  # 4  d-e
            (2, 3),  # 5  d-e
            (3, 1),  # 6  e-b
            (2, 1),  # 7  d-b
            (1, 4),  # 8  b-t1
            (1, 5),  # 9  b-t2
            (4, 5),  # 10 t1-t2
        ],
    )


def fig24_gstar() -> MultiGraph:
    """fig23 with b split: b'=6 takes a,t1,t2; b''=7 takes e,d; edge 11 = b'b''.

    The drawing's vertical stroke is read as e-b'' (not e-b'), which is what
    makes the new edge b'b'' non-cut in the surrounding induced subgraph.
    """
    return MultiGraph.from_parts(
        [0, 2, 3, 4, 5, 6, 7],
        [
            (0, 0, 0),
            (1, 0, 2),
            (2, 0, 6),
            (3, 2, 3),
            (4, 2, 3),
            (5, 2, 3),
            (6, 3, 7),
            (7, 2, 7),
            (8, 6, 4),
            (9, 6, 5),
            (10, 4, 5),
            (11, 6, 7),
        ],
    )


#: No-argument figure fixtures by name.
FIGURES = {
    "fig1_g": fig1_g,
    "fig2_g1": fig2_g1,
    "fig3_g2": fig3_g2,
    "fig4_g": fig4_g,
    "fig5_g1": fig5_g1,
    "fig6_g2": fig6_g2,
    "fig7_g1": fig7_g1,
    "fig8_g": fig8_g,
    "fig23_g": fig23_g,
    "fig24_gstar": fig24_gstar,
}
