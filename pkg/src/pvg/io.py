"""JSON / DOT / CSV serialization for graphs, point sets, and results.

Graphs travel as ``{"n": int, "edges": [[u, v], ...], "name"?: str}``.
Point sets travel as integer quadruples ``[x_num, x_den, y_num, y_den]``
(either a bare list or wrapped as ``{"points": [...]}``), which keeps the
rationals exact; decimal encodings are deliberately not accepted.
External indices are 0-based.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from fractions import Fraction
from typing import Any, Iterable, Optional

from .core import Embedding
from .errors import DuplicatePointsError, SchemaError
from .geometry import Point
from .graphs import Graph
from .reductions import Family, Instance, ReducedInstance
from .solvers import DominatingWitness, Witness


def _load_json(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", what) from exc


# ---------------------------------------------------------------------------
# graphs


def parse_graph(text: str) -> Graph:
    doc = _load_json(text, "graph")
    return graph_from_obj(doc, "graph")


def graph_from_obj(doc: Any, ctx: str = "graph") -> Graph:
    if not isinstance(doc, dict):
        raise SchemaError("expected an object", ctx)
    if "n" not in doc or not isinstance(doc["n"], int) or doc["n"] < 0:
        raise SchemaError("field 'n' must be a non-negative integer", ctx)
    n = doc["n"]
    raw = doc.get("edges", [])
    if not isinstance(raw, list):
        raise SchemaError("field 'edges' must be a list", ctx)
    edges = set()
    for idx, e in enumerate(raw):
        where = f"{ctx}.edges[{idx}]"
        if (not isinstance(e, list)) or len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise SchemaError("edge must be a pair of integers", where)
        u, v = e
        if u == v:
            raise SchemaError(f"self-loop at vertex {u}", where)
        if not (0 <= u < n and 0 <= v < n):
            raise SchemaError(f"vertex index out of range for n={n}", where)
        key = (u, v) if u < v else (v, u)
        if key in edges:
            raise SchemaError(f"duplicate edge {key}", where)
        edges.add(key)
    return Graph(n, frozenset(edges))


def graph_to_obj(g: Graph, name: Optional[str] = None) -> dict:
    obj: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    if name is not None:
        obj["name"] = name
    return obj


def emit_graph(g: Graph, name: Optional[str] = None) -> str:
    return json.dumps(graph_to_obj(g, name)) + "\n"


# ---------------------------------------------------------------------------
# point sets


def parse_points(text: str) -> Embedding:
    doc = _load_json(text, "points")
    if isinstance(doc, dict):
        doc = doc.get("points")
    if not isinstance(doc, list):
        raise SchemaError("expected a list of point quadruples", "points")
    pts = []
    for idx, quad in enumerate(doc):
        where = f"points[{idx}]"
        if (not isinstance(quad, list)) or len(quad) != 4 or not all(isinstance(x, int) for x in quad):
            raise SchemaError("point must be [x_num, x_den, y_num, y_den] integers", where)
        xn, xd, yn, yd = quad
        if xd <= 0 or yd <= 0:
            raise SchemaError("denominators must be positive", where)
        pts.append(Point(Fraction(xn, xd), Fraction(yn, yd)))
    try:
        return Embedding(pts)
    except DuplicatePointsError as exc:
        raise SchemaError(str(exc), "points") from exc


def emit_points(emb: Embedding) -> str:
    quads = [[p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator]
             for p in emb.points]
    return json.dumps({"points": quads}) + "\n"


# ---------------------------------------------------------------------------
# families


def parse_family(text: str) -> Family:
    doc = _load_json(text, "family")
    if isinstance(doc, dict):
        doc = doc.get("members")
    if not isinstance(doc, list) or not doc:
        raise SchemaError("expected a nonempty list of member graphs", "family")
    members = tuple(graph_from_obj(m, f"family.members[{i}]") for i, m in enumerate(doc))
    return Family(members)


def emit_family(f: Family) -> str:
    return json.dumps({"members": [graph_to_obj(m) for m in f.members]}) + "\n"


# ---------------------------------------------------------------------------
# DOT


def emit_dot(g: Graph, blockers: Optional[Iterable[int]] = None) -> str:
    """Undirected DOT with stable v0..v{n-1} naming; blockers get an attribute."""
    flagged = set(blockers or ())
    deg = g.degrees()
    lines = ["graph {"]
    for v in range(g.n):
        if v in flagged:
            lines.append(f"  v{v} [blocker=true];")
        elif deg[v] == 0:
            lines.append(f"  v{v};")
    for u, v in sorted(g.edges):
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# results


def witness_to_obj(w: Witness) -> dict:
    obj: dict[str, Any] = {"answer": w.answer}
    if w.certificate is not None:
        obj["certificate"] = _jsonable(w.certificate)
    return obj


def dominating_witness_to_obj(w: DominatingWitness) -> dict:
    return {"set": sorted(w.set), "size": len(w.set), "verified": w.verified}


def reduced_instance_to_obj(r: ReducedInstance) -> dict:
    inst = r.instance
    obj: dict[str, Any] = {
        "problem": inst.problem,
        "graph": graph_to_obj(inst.graph),
        "k": inst.k,
        "provenance": {k: v for k, v in asdict(r.provenance).items() if v is not None},
    }
    if inst.family is not None:
        obj["family"] = {"members": [graph_to_obj(m) for m in inst.family.members]}
    return obj


def _jsonable(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return value
