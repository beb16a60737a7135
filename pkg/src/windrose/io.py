"""JSON instance documents, drawing documents and SVG rendering."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Tuple

from .drawing import Drawing
from .errors import WindroseError
from .graph import PlaneGraph, QConstraints, Quadrant, build_plane_graph


class DocumentError(WindroseError, ValueError):
    """A JSON document is malformed; the message names the offending field or line."""


# ---------------------------------------------------------------------------
# instances


def instance_to_document(g: PlaneGraph, q: QConstraints) -> Dict:
    """Canonical document: vertices in graph order, darts by vertex then rotation."""
    walk = [str(d[0]) for d in g.faces[g.outer_face]]
    return {
        "vertices": [str(v) for v in g.vertices],
        "rotations": {str(v): [str(x) for x in g.rotation(v)] for v in g.vertices},
        "outer_face": walk,
        "quadrants": {f"{u}->{v}": q[(u, v)].name for u, v in g.darts()},
    }


def dumps(doc: Dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def parse_instance(text: str) -> Tuple[PlaneGraph, QConstraints]:
    """Parse and validate an instance document.

    Raises:
        DocumentError: bad JSON or a bad field; the message says where.
        GraphError: the rotation system is not a valid plane graph.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return document_to_instance(doc)


def document_to_instance(doc) -> Tuple[PlaneGraph, QConstraints]:
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object")
    for key in ("vertices", "rotations", "outer_face", "quadrants"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise DocumentError("field 'vertices' must be a list of strings")
    bad = [v for v in vertices if "->" in v]
    if bad:
        raise DocumentError(f"field 'vertices': id {bad[0]!r} contains '->'")
    rotations = doc["rotations"]
    if not isinstance(rotations, dict) or not all(isinstance(r, list) for r in rotations.values()):
        raise DocumentError("field 'rotations' must map ids to lists")
    outer = doc["outer_face"]
    if not isinstance(outer, list) or len(outer) < 2:
        raise DocumentError("field 'outer_face' must list at least two vertex ids")
    g = build_plane_graph(vertices, rotations, (outer[0], outer[1]))
    walk = [d[0] for d in g.faces[g.outer_face]]
    if walk != outer:
        raise DocumentError(f"field 'outer_face': {outer} is not the facial walk starting with dart {outer[0]}->{outer[1]}")
    quads = doc["quadrants"]
    if not isinstance(quads, dict):
        raise DocumentError("field 'quadrants' must be an object")
    labels = {}
    for key, value in quads.items():
        if not isinstance(key, str) or key.count("->") != 1:
            raise DocumentError(f"field 'quadrants': key {key!r} is not of the form 'u->v'")
        u, v = key.split("->")
        if not g.has_edge(u, v):
            raise DocumentError(f"field 'quadrants': {key!r} is not a dart of the graph")
        try:
            labels[(u, v)] = Quadrant.parse(value)
        except ValueError:
            raise DocumentError(f"field 'quadrants': {key!r} has bad quadrant {value!r}") from None
    missing = [d for d in g.darts() if d not in labels]
    if missing:
        raise DocumentError(f"field 'quadrants': no label for dart '{missing[0][0]}->{missing[0][1]}'")
    return g, QConstraints(labels)


# ---------------------------------------------------------------------------
# drawings


def _num_out(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else {"num": x.numerator, "den": x.denominator}


def _num_in(x):
    if isinstance(x, bool):
        raise DocumentError("coordinates must be numbers")
    if isinstance(x, int):
        return x
    if isinstance(x, dict) and set(x) == {"num", "den"}:
        return Fraction(x["num"], x["den"])
    raise DocumentError(f"bad coordinate {x!r}")


def drawing_to_document(g: PlaneGraph, d: Drawing) -> Dict:
    return {
        "coordinate_kind": d.coordinate_kind,
        "vertices": {str(v): [_num_out(c) for c in d.points[v]] for v in g.vertices},
        "edges": [
            {"source": str(u), "target": str(v), "bends": [[_num_out(c) for c in p] for p in d.polyline(u, v)[1:-1]]}
            for u, v in g.edges()
        ],
    }


def document_to_drawing(doc) -> Drawing:
    try:
        points = {v: tuple(_num_in(c) for c in p) for v, p in doc["vertices"].items()}
        bends = {}
        for e in doc.get("edges", []):
            if e.get("bends"):
                bends[(e["source"], e["target"])] = [tuple(_num_in(c) for c in p) for p in e["bends"]]
    except (KeyError, TypeError, AttributeError) as exc:
        raise DocumentError(f"malformed drawing document: {exc}") from None
    return Drawing(points, bends, doc.get("coordinate_kind", "integer"))


# ---------------------------------------------------------------------------
# SVG

_SCALE = 20
_MARGIN = 30
_COLOURS = {Quadrant.NE: "#d62728", Quadrant.NW: "#1f77b4", Quadrant.SW: "#2ca02c", Quadrant.SE: "#9467bd"}


def drawing_to_svg(g: PlaneGraph, q: QConstraints, d: Drawing) -> str:
    """Render vertices, polylines and one quadrant-coloured arrowhead per dart."""
    pts = [p for p in d.points.values()] + [p for bs in d.bends.values() for p in bs]
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * _SCALE + 2 * _MARGIN
    height = (y1 - min(ys)) * _SCALE + 2 * _MARGIN

    def tr(p):
        return (float(p[0]) - x0) * _SCALE + _MARGIN, (y1 - float(p[1])) * _SCALE + _MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">',
        "<defs>",
    ]
    for quad, colour in _COLOURS.items():
        out.append(
            f'<marker id="q{quad.name}" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto">'
            f'<path d="M0,0 L10,5 L0,10 z" fill="{colour}"/></marker>'
        )
    out.append("</defs>")
    for u, v in g.edges():
        line = " ".join("%.2f,%.2f" % tr(p) for p in d.polyline(u, v))
        out.append(f'<polyline points="{line}" fill="none" stroke="#444" stroke-width="1.5"/>')
    for u, v in g.darts():
        line = d.polyline(u, v)
        (ax, ay), (bx, by) = tr(line[0]), tr(line[1])
        mx, my = ax + 0.35 * (bx - ax), ay + 0.35 * (by - ay)
        out.append(
            f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{mx:.2f}" y2="{my:.2f}" stroke="{_COLOURS[q[(u, v)]]}" '
            f'stroke-width="1" marker-end="url(#q{q[(u, v)].name})"/>'
        )
    for v in g.vertices:
        cx, cy = tr(d.points[v])
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="white" stroke="black"/>')
        out.append(f'<text x="{cx + 5:.2f}" y="{cy - 5:.2f}" font-size="10" font-family="sans-serif">{_escape(str(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
