"""Straight-line drawings for graphs whose blocks are edges or planar 3-trees.

The graph is peeled one step at a time and rebuilt in reverse order:

* a degree-1 vertex goes back into the wedge at its neighbour,
* a leaf triangle (two degree-2 vertices) goes back into the wedge at its
  cut vertex,
* an inner degree-3 vertex goes back into its triangular face, inside the
  box cut out by its three quadrant constraints.

Coordinates are exact Fractions and each placement is checked against the
segments already drawn.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from .drawing import Drawing, rational_kind
from .errors import BlockStructureUnsupported, DrawError
from .geometry import clip_halfplane, direction_at, interior_point, orient, pseudo_angle, segment_intersection
from .graph import Dart, PlaneGraph, QConstraints, Quadrant, Vertex
from .verify import verify_drawing

# pseudo-angle interval start of each open quadrant
_ARC_START = {Quadrant.NE: 0, Quadrant.NW: 1, Quadrant.SW: 2, Quadrant.SE: 3}
_RATIOS = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3), Fraction(4), Fraction(1, 4), Fraction(8), Fraction(1, 8), Fraction(16), Fraction(1, 16)]
_SAMPLES = [Fraction(1, 2), Fraction(1, 4), Fraction(3, 4), Fraction(1, 8), Fraction(7, 8), Fraction(1, 16), Fraction(15, 16)]
_MAX_HALVINGS = 200


def check_block_structure(g: PlaneGraph) -> None:
    """Raise BlockStructureUnsupported unless every block is an edge or a planar 3-tree."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(len(g)))
    nxg.add_edges_from((g.index(u), g.index(v)) for u, v in g.edges())
    for block in nx.biconnected_components(nxg):
        if len(block) <= 2:
            continue
        sub = nxg.subgraph(block)
        if sub.number_of_edges() != 3 * len(block) - 6 and len(block) > 3:
            raise BlockStructureUnsupported(f"a block on {len(block)} vertices is not maximal planar")
        if len(block) == 3 and sub.number_of_edges() != 3:
            raise BlockStructureUnsupported("a 3-vertex block must be a triangle")
        if not nx.is_chordal(sub):
            raise BlockStructureUnsupported(f"a block on {len(block)} vertices is not a planar 3-tree")


class _Sub:
    """Induced plane subgraph on a vertex subset, with the outer face tracked."""

    def __init__(self, g: PlaneGraph, alive: set, outer_dart: Dart):
        self.g = g
        self.alive = alive
        verts = [v for v in g.vertices if v in alive]
        rots = {v: [x for x in g.rotation(v) if x in alive] for v in verts}
        self.pg = PlaneGraph(verts, rots, outer_dart)

    def without(self, removed: Sequence[Vertex]) -> "_Sub":
        alive = self.alive - set(removed)
        walk = self.pg.faces[self.pg.outer_face]
        dart = next((d for d in walk if d[0] in alive and d[1] in alive), None)
        if dart is None:
            dart = next(d for d in self.pg.darts() if d[0] in alive and d[1] in alive)
        return _Sub(self.g, alive, dart)


def three_tree_block_drawing(g: PlaneGraph, q: QConstraints, radius: Fraction = Fraction(1)) -> Drawing:
    """Straight-line windrose drawing of ``(g, q)`` with g's embedding.

    Args:
        g: plane graph whose blocks are edges or planar 3-trees, with the
            embedding of some windrose-planar drawing.
        q: quadrant constraints.
        radius: initial distance for wedge placements; smaller values only
            move vertices closer to their anchors.

    Raises:
        BlockStructureUnsupported: some block is neither an edge nor a planar 3-tree.
        DrawError: no placement was found (the instance is not windrose-planar
            with this embedding).
    """
    check_block_structure(g)
    radius = Fraction(radius)
    subs = [_Sub(g, set(g.vertices), g.faces[g.outer_face][0])]
    steps: List[Tuple] = []
    while not _is_base(subs[-1].pg):
        step = _pick_step(subs[-1].pg)
        if step is None:
            raise DrawError("no removable vertex found; embedding does not peel")
        steps.append(step)
        subs.append(subs[-1].without(step[1]))
    base = subs[-1].pg
    points = _draw_base(base, q)
    segments = [(u, v) for u, v in base.edges()]
    for step, sub in zip(reversed(steps), reversed(subs[:-1])):
        kind = step[0]
        if kind == "leaf":
            _place_leaf(sub.pg, q, points, segments, step[1][0], step[2], radius)
        elif kind == "pair":
            _place_pair(sub.pg, q, points, segments, step[2], step[1][0], step[1][1], radius)
        else:
            _place_inner(sub.pg, q, points, segments, step[1][0])
    drawing = Drawing(points, {}, rational_kind(points.values()))
    report = verify_drawing(g, q, drawing)
    if not report.ok:
        raise DrawError(f"straight-line construction failed verification: {report.violations[:3]}")
    return drawing


def _is_base(pg: PlaneGraph) -> bool:
    return len(pg) == 2 or (len(pg) == 3 and pg.num_edges == 3)


def _pick_step(pg: PlaneGraph):
    for x in pg.vertices:
        if pg.degree(x) == 1:
            return ("leaf", (x,), pg.rotation(x)[0])
    for c in pg.vertices:
        rot = pg.rotation(c)
        if len(rot) < 3:
            continue
        for first in rot:
            second = pg.cw_next(c, first)
            if pg.degree(first) != 2 or pg.degree(second) != 2 or not pg.has_edge(first, second):
                continue
            f = pg.angle((c, first)).face
            if f != pg.outer_face and len(pg.faces[f]) == 3:
                return ("pair", (first, second), c)
    for x in pg.vertices:
        if pg.degree(x) != 3 or pg.is_external(x):
            continue
        if all(len(pg.faces[pg.angle((x, y)).face]) == 3 for y in pg.rotation(x)):
            return ("inner", (x,), None)
    return None


def _quadrant_vector(quad: Quadrant, scale=1) -> Tuple[Fraction, Fraction]:
    sx, sy = quad.signs
    return (Fraction(sx * scale), Fraction(sy * scale))


def _draw_base(pg: PlaneGraph, q: QConstraints) -> Dict[Vertex, Tuple[Fraction, Fraction]]:
    verts = pg.vertices
    if len(verts) == 2:
        u, v = verts
        return {u: (Fraction(0), Fraction(0)), v: _quadrant_vector(q[(u, v)])}
    walk = [d[0] for d in pg.faces[pg.outer_face]]
    a, b, c = walk
    for (x1, y1), (x2, y2) in product(product(range(1, 5), repeat=2), repeat=2):
        sb, sc = q[(a, b)].signs, q[(a, c)].signs
        pa = (Fraction(0), Fraction(0))
        pb = (Fraction(sb[0] * x1), Fraction(sb[1] * y1))
        pc = (Fraction(sc[0] * x2), Fraction(sc[1] * y2))
        if Quadrant.of_vector(pc[0] - pb[0], pc[1] - pb[1]) != q[(b, c)]:
            continue
        if orient(pa, pb, pc) < 0:
            return {a: pa, b: pb, c: pc}
    raise DrawError("triangle admits no drawing with its quadrants and orientation")


def _crossing_free(new: List[Tuple[Vertex, Vertex]], points, segments) -> bool:
    for u, v in new:
        a, b = points[u], points[v]
        for x, y in segments:
            if {x, y} == {u, v}:
                continue
            hit = segment_intersection(a, b, points[x], points[y])
            if hit is None:
                continue
            shared = {u, v} & {x, y}
            if hit[0] == "point" and len(shared) == 1 and hit[1] == points[next(iter(shared))]:
                continue
            return False
    # new segments among themselves share exactly their common endpoint
    for i in range(len(new)):
        for j in range(i + 1, len(new)):
            (u, v), (x, y) = new[i], new[j]
            hit = segment_intersection(points[u], points[v], points[x], points[y])
            shared = {u, v} & {x, y}
            if hit is not None and not (hit[0] == "point" and len(shared) == 1 and hit[1] == points[next(iter(shared))]):
                return False
    return True


def _arc(pg: PlaneGraph, points, c: Vertex, pred: Vertex, succ: Vertex) -> Tuple[Fraction, Fraction]:
    """Lifted pseudo-angle interval (lo, hi) swept clockwise from pred to succ around c."""
    pc = points[c]
    a = pseudo_angle(points[pred][0] - pc[0], points[pred][1] - pc[1])
    if pred == succ:
        return a - 4, a
    b = pseudo_angle(points[succ][0] - pc[0], points[succ][1] - pc[1])
    span = (a - b) % 4 or Fraction(4)
    return b, b + span


def _arc_pieces(lo: Fraction, hi: Fraction, quad: Quadrant) -> List[Tuple[Fraction, Fraction]]:
    base = _ARC_START[quad]
    out = []
    for shift in (-8, -4, 0, 4, 8):
        s, e = max(lo, base + shift), min(hi, base + shift + 1)
        if s < e:
            out.append((s, e))
    return out


def _unit(theta: Fraction) -> Tuple[Fraction, Fraction]:
    dx, dy = direction_at(theta)
    m = max(abs(dx), abs(dy))
    return (dx / m, dy / m)


def _place_leaf(pg: PlaneGraph, q, points, segments, x: Vertex, c: Vertex, radius: Fraction) -> None:
    pred, succ = pg.cw_prev(c, x), pg.cw_next(c, x)
    lo, hi = _arc(pg, points, c, pred, succ)
    quad = q[(c, x)]
    pieces = _arc_pieces(lo, hi, quad)
    if not pieces:
        raise DrawError(f"wedge at {c!r} misses quadrant {quad.name} of the leaf {x!r}")
    diag = None
    for s, e in pieces:
        for cand in (_ARC_START[quad] + Fraction(1, 2) + k for k in (-8, -4, 0, 4, 8)):
            if s < cand < e:
                diag = cand
    s, e = pieces[0]
    theta = diag if diag is not None else (s + e) / 2
    ux, uy = _unit(theta)
    t = radius
    pc = points[c]
    for _ in range(_MAX_HALVINGS):
        points[x] = (pc[0] + t * ux, pc[1] + t * uy)
        if _crossing_free([(c, x)], points, segments):
            segments.append((c, x))
            return
        t /= 2
    raise DrawError(f"could not place leaf {x!r}")


def _place_pair(pg: PlaneGraph, q, points, segments, c: Vertex, v: Vertex, u: Vertex, radius: Fraction) -> None:
    # v precedes u clockwise around c
    pred, succ = pg.cw_prev(c, v), pg.cw_next(c, u)
    lo, hi = _arc(pg, points, c, pred, succ)
    pieces_v = _arc_pieces(lo, hi, q[(c, v)])
    pieces_u = _arc_pieces(lo, hi, q[(c, u)])
    cands_v = [s + k * (e - s) for s, e in pieces_v for k in _SAMPLES]
    cands_u = [s + k * (e - s) for s, e in pieces_u for k in _SAMPLES]
    pc = points[c]
    want = q[(v, u)]
    for tv in cands_v:
        for tu in cands_u:
            if not (0 < tv - tu < 2):
                continue
            dv, du = _unit(tv), _unit(tu)
            for r in _RATIOS:
                gap = (du[0] * r - dv[0], du[1] * r - dv[1])
                if Quadrant.of_vector(*gap) != want:
                    continue
                t = radius
                for _ in range(_MAX_HALVINGS):
                    points[v] = (pc[0] + t * dv[0], pc[1] + t * dv[1])
                    points[u] = (pc[0] + t * r * du[0], pc[1] + t * r * du[1])
                    if _crossing_free([(c, v), (c, u), (v, u)], points, segments):
                        segments.extend([(c, v), (c, u), (v, u)])
                        return
                    t /= 2
    points.pop(v, None)
    points.pop(u, None)
    raise DrawError(f"could not place the triangle on {c!r}, {v!r}, {u!r}")


def _place_inner(pg: PlaneGraph, q, points, segments, x: Vertex) -> None:
    nbrs = pg.rotation(x)
    poly = [points[y] for y in nbrs]
    if orient(*poly) < 0:
        poly.reverse()
    for y in nbrs:
        sx, sy = q[(y, x)].signs
        py = points[y]
        poly = clip_halfplane(poly, lambda p, sx=sx, px=py[0]: sx * (p[0] - px))
        poly = clip_halfplane(poly, lambda p, sy=sy, yy=py[1]: sy * (p[1] - yy))
        if len(poly) < 3:
            break
    pt = interior_point(poly)
    if pt is None:
        raise DrawError(f"no admissible point for {x!r} inside its triangle")
    points[x] = pt
    segments.extend((y, x) for y in nbrs)
