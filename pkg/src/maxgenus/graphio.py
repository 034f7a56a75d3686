"""Graph serialization: MG1 text, a JSON mirror, DOT export, witness files.

MG1 is deliberately rigid so that byte-identical output is reproducible and
edge ids named in traces stay replayable:

    # comment
    v <id>
    e <id> <u> <w>

Decimal ids, single spaces, LF line endings, nothing else.  ``u == w``
encodes a loop.  Canonical emission lists vertices ascending, then edges
ascending by id; parse(emit(g)) == g for every graph.

The JSON mirror is ``{"vertices": [...], "edges": [{"id","u","w"}, ...]}``.
A spanning-tree witness rides along as ``t <edge-id>`` lines appended after
an MG1 body (or a bare JSON array of edge ids).
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import GraphConstructionError, ParseError
from .multigraph import MultiGraph

_V_LINE = re.compile(r"v (0|[1-9][0-9]*)")
_E_LINE = re.compile(r"e (0|[1-9][0-9]*) (0|[1-9][0-9]*) (0|[1-9][0-9]*)")
_T_LINE = re.compile(r"t (0|[1-9][0-9]*)")


def _parse_lines(text: str, allow_tree: bool):
    vertices: list[int] = []
    vseen: set[int] = set()
    edges: list[tuple[int, int, int]] = []
    eseen: set[int] = set()
    tree: list[int] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        if line == "" and lineno == text.count("\n") + 1:
            break  # text ends with the final LF
        if line.startswith("#"):
            continue
        if line.startswith("v"):
            m = _V_LINE.fullmatch(line)
            if not m:
                raise ParseError(f"malformed vertex line {line!r}", lineno)
            vid = int(m.group(1))
            if vid in vseen:
                raise ParseError(f"duplicate vertex id {vid}", lineno)
            vseen.add(vid)
            vertices.append(vid)
        elif line.startswith("e"):
            m = _E_LINE.fullmatch(line)
            if not m:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            eid, u, w = (int(m.group(k)) for k in (1, 2, 3))
            if eid in eseen:
                raise ParseError(f"duplicate edge id {eid}", lineno)
            if u not in vseen or w not in vseen:
                raise ParseError(
                    f"edge {eid} references undeclared vertex ({u},{w})", lineno
                )
            eseen.add(eid)
            edges.append((eid, u, w))
        elif allow_tree and line.startswith("t"):
            m = _T_LINE.fullmatch(line)
            if not m:
                raise ParseError(f"malformed tree line {line!r}", lineno)
            eid = int(m.group(1))
            if eid not in eseen:
                raise ParseError(f"tree references unknown edge {eid}", lineno)
            tree.append(eid)
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    return vertices, edges, tree


def parse_mg1(text: str) -> MultiGraph:
    """Parse strict MG1 text; errors carry the offending line number."""
    vertices, edges, _ = _parse_lines(text, allow_tree=False)
    return MultiGraph.from_parts(vertices, edges)


def emit_mg1(g: MultiGraph) -> str:
    """Canonical MG1: vertices ascending, then edges ascending by id."""
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {eid} {u} {w}" for eid, u, w in g.edges]
    return "".join(line + "\n" for line in lines)


def parse_witness(text: str) -> tuple[MultiGraph, frozenset[int]]:
    """MG1 body followed by ``t <edge-id>`` witness lines."""
    vertices, edges, tree = _parse_lines(text, allow_tree=True)
    return MultiGraph.from_parts(vertices, edges), frozenset(tree)


def emit_witness(g: MultiGraph, tree: frozenset[int]) -> str:
    lines = [emit_mg1(g), "# spanning tree witness\n"]
    lines += [f"t {eid}\n" for eid in sorted(tree)]
    return "".join(lines)


def parse_json(text: str) -> MultiGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ParseError('JSON graph needs "vertices" and "edges" keys')
    try:
        vertices = [int(v) for v in obj["vertices"]]
        edges = [(int(e["id"]), int(e["u"]), int(e["w"])) for e in obj["edges"]]
    except (TypeError, KeyError, ValueError) as exc:
        raise ParseError(f"malformed JSON graph: {exc!r}") from None
    try:
        return MultiGraph.from_parts(vertices, edges)
    except GraphConstructionError as exc:
        raise ParseError(str(exc)) from None


def emit_json(g: MultiGraph) -> str:
    obj = {
        "vertices": list(g.vertices),
        "edges": [{"id": eid, "u": u, "w": w} for eid, u, w in g.edges],
    }
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def emit_dot(g: MultiGraph) -> str:
    """Undirected DOT, one statement per edge, edge id in the label."""
    lines = ["graph G {"]
    with_edges = set()
    for eid, u, w in g.edges:
        with_edges.add(u)
        with_edges.add(w)
        lines.append(f'  v{u} -- v{w} [label="e{eid}"];')
    for v in g.vertices:
        if v not in with_edges:
            lines.append(f"  v{v};")
    lines.append("}")
    return "".join(line + "\n" for line in lines)


def load_graph(path: str | Path) -> MultiGraph:
    """Read a graph file, sniffing MG1 vs JSON from the first byte."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if not stripped:
        raise ParseError(f"{path}: empty file")
    if stripped[0] == "{":
        return parse_json(text)
    return parse_mg1(text)


def save_graph(g: MultiGraph, path: str | Path) -> None:
    """Write canonical bytes; a .json suffix selects the JSON mirror."""
    p = Path(path)
    text = emit_json(g) if p.suffix == ".json" else emit_mg1(g)
    p.write_text(text, encoding="utf-8")


def save_witness(g: MultiGraph, tree: frozenset[int], path: str | Path) -> None:
    """Witness file: JSON array of edge ids, or MG1 plus ``t`` lines."""
    p = Path(path)
    if p.suffix == ".json":
        p.write_text(json.dumps(sorted(tree)) + "\n", encoding="utf-8")
    else:
        p.write_text(emit_witness(g, tree), encoding="utf-8")
