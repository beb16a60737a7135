"""Labeling-preserving surgery on plane graphs.

Three stages turn an instance with an angular labeling into a
quasi-triangulated one:

1. :func:`triangulate_preserving_labeling` wraps the graph in a triangle and
   cuts ears until every face is a triangle, splitting angle categories so
   the new labeling refines the old one.
2. :func:`eliminate_180_angles` subdivides edges to remove every internal
   angle of 180 degrees.
3. :func:`add_poles` adds the four poles and their edges.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple

from .errors import AugmentError, NotAngular, ParallelEdgeWouldBeCreated, StuckAtInternalVertex
from .graph import Dart, PlaneGraph, QConstraints, Quadrant, Vertex, extreme_neighbor, quadrant_steps
from .labeling import AngleLabeling, check_angular, labeling_from_triangulated

StepCallback = Callable[[str, PlaneGraph, AngleLabeling], None]


@dataclass
class SubdivisionMap:
    """Where each edge of an earlier graph went in an augmented graph.

    Attributes:
        replacement: edge ``(u, w)`` -> vertex path from ``u`` to ``w``
            (two vertices, or three when subdivided).
        dummy_vertices: vertices added by augmentation.
        dummy_edges: edges added by augmentation (as frozensets).
    """

    replacement: Dict[Dart, Tuple[Vertex, ...]] = field(default_factory=dict)
    dummy_vertices: Set[Vertex] = field(default_factory=set)
    dummy_edges: Set[frozenset] = field(default_factory=set)

    def path(self, u: Vertex, w: Vertex) -> Tuple[Vertex, ...]:
        if (u, w) in self.replacement:
            return self.replacement[(u, w)]
        if (w, u) in self.replacement:
            return tuple(reversed(self.replacement[(w, u)]))
        return (u, w)

    def subdivided(self) -> Dict[Dart, Vertex]:
        return {e: p[1] for e, p in self.replacement.items() if len(p) == 3}


@dataclass(frozen=True)
class PoleSet:
    north: Vertex
    west: Vertex
    south: Vertex
    east: Vertex

    def as_tuple(self) -> Tuple[Vertex, Vertex, Vertex, Vertex]:
        return (self.north, self.west, self.south, self.east)


class _Work:
    """Mutable rotation system used during surgery."""

    def __init__(self, g: PlaneGraph):
        self.vertices: List[Vertex] = list(g.vertices)
        self.rot: Dict[Vertex, List[Vertex]] = {v: list(g.rotation(v)) for v in g.vertices}
        self.edges: Set[frozenset] = {frozenset(e) for e in g.edges()}
        self._counter = 0

    def fresh(self, stem: str) -> str:
        while True:
            name = f"~{stem}{self._counter}"
            self._counter += 1
            if name not in self.rot:
                return name

    def add_vertex(self, v: Vertex, rotation: Iterable[Vertex]) -> None:
        self.vertices.append(v)
        self.rot[v] = list(rotation)

    def insert_after(self, v: Vertex, anchor: Vertex, new: Vertex) -> None:
        rot = self.rot[v]
        rot.insert(rot.index(anchor) + 1, new)

    def replace(self, v: Vertex, old: Vertex, new: Vertex) -> None:
        rot = self.rot[v]
        rot[rot.index(old)] = new

    def add_edge(self, u: Vertex, v: Vertex) -> None:
        e = frozenset((u, v))
        if u == v or e in self.edges:
            raise ParallelEdgeWouldBeCreated(f"edge {u!r}-{v!r} already exists")
        self.edges.add(e)

    def cw_next(self, v: Vertex, x: Vertex) -> Vertex:
        rot = self.rot[v]
        return rot[(rot.index(x) + 1) % len(rot)]

    def graph(self, outer_dart: Dart) -> PlaneGraph:
        return PlaneGraph(self.vertices, self.rot, outer_dart)


# ---------------------------------------------------------------------------
# triangulation


@dataclass
class Triangulation:
    graph: PlaneGraph
    labeling: AngleLabeling
    subdivision: SubdivisionMap


def triangulate_preserving_labeling(g: PlaneGraph, a: AngleLabeling, on_step: Optional[StepCallback] = None) -> Triangulation:
    """Augment ``g`` to a triangulation whose labeling refines ``a``.

    Args:
        g: connected plane graph.
        a: angular labeling of ``g``.
        on_step: called as ``on_step(kind, graph, labeling)`` after the
            wrap and after every ear cut; meant for tests and demos.

    Raises:
        NotAngular: ``a`` violates a vertex or face angle sum.
        ParallelEdgeWouldBeCreated: internal consistency failure.
    """
    if check_angular(g, a):
        raise NotAngular("labeling is not angular")
    work = _Work(g)
    lab = AngleLabeling(a)
    outer_dart = g.faces[g.outer_face][0]
    if len(g.faces[g.outer_face]) != 3:
        outer_dart = _wrap(work, lab, g)
        if on_step:
            on_step("wrap", work.graph(outer_dart), AngleLabeling(lab))
    current = work.graph(outer_dart)
    for f, walk in enumerate(current.faces):
        if f == current.outer_face or len(walk) == 3:
            continue
        _triangulate_face(work, lab, current, walk, outer_dart, on_step)
    result = work.graph(outer_dart)
    assert all(len(f) == 3 for f in result.faces), "triangulation left a non-triangular face"
    sub = SubdivisionMap(
        dummy_vertices=set(result.vertices) - set(g.vertices),
        dummy_edges={frozenset(e) for e in result.edges()} - {frozenset(e) for e in g.edges()},
    )
    return Triangulation(result, lab, sub)


def _wrap(work: _Work, lab: AngleLabeling, g: PlaneGraph) -> Dart:
    p, v = g.faces[g.outer_face][0]
    key = (v, p)
    old = lab[key]
    a, b, c = work.fresh("a"), work.fresh("b"), work.fresh("c")
    work.insert_after(v, p, a)
    work.add_vertex(a, [b, v, c])
    work.add_vertex(b, [c, a])
    work.add_vertex(c, [a, b])
    for e in ((v, a), (a, b), (b, c), (c, a)):
        work.add_edge(*e)
    lab[key] = 0
    lab[(v, a)] = old
    lab.update({(a, b): 0, (a, v): 0, (a, c): 360, (b, c): 90, (b, a): 270, (c, a): 90, (c, b): 270})
    return (a, b)


_BIG = {270, 360}
_SMALL = {0, 90}


def _match(window: List[int]):
    """Ear to cut in a window of 3 or 4 face angles, as (start, parts) or None.

    ``start`` is the window offset of the ear's first angle and ``parts`` the
    three ear angles.  Both reading directions of the face are tried.
    """
    if len(window) == 3:
        g0, d, g2 = window
        if g0 in _BIG and d in _SMALL:
            return 0, (90 if d == 90 else 180, d, 0)
        if g2 in _BIG and d in _SMALL:
            return 0, (0, d, 90 if d == 90 else 180)
        return None
    s0, s1, s2, s3 = window
    if (s0, s1, s2, s3) == (90, 90, 90, 90):
        return ((0, (0, 90, 90)), (1, (90, 90, 0)))
    if s1 == 180 and s2 in _SMALL:
        # first choice: diagonal v1-v3, fallback: v2-v4
        return ((0, (0, 180, 0)), (1, (180 if s2 == 0 else 90, s2, 0)))
    if s2 == 180 and s1 in _SMALL:
        return ((1, (0, 180, 0)), (0, (0, s1, 180 if s1 == 0 else 90)))
    return None


def _triangulate_face(work: _Work, lab: AngleLabeling, g: PlaneGraph, walk, outer_dart, on_step) -> None:
    # stack items: [vertex, predecessor on the face, angle value]
    seq = []
    for i, (v, _) in enumerate(walk):
        prev = walk[i - 1][0]
        seq.append([v, prev, lab[(v, prev)]])
    stack: List[list] = []
    for item in seq:
        stack.append(item)
        while len(stack) >= 4 and _try_cut(work, lab, stack):
            if on_step:
                on_step("ear", work.graph(outer_dart), AngleLabeling(lab))
    idle = 0
    while len(stack) > 3:
        if _try_cut(work, lab, stack):
            idle = 0
            if on_step:
                on_step("ear", work.graph(outer_dart), AngleLabeling(lab))
            continue
        stack.append(stack.pop(0))
        idle += 1
        if idle > len(stack):
            raise NotAngular("no ear pattern found in face of length %d" % len(stack))


def _try_cut(work: _Work, lab: AngleLabeling, stack: List[list]) -> bool:
    """Cut one ear among the top angles of the stack; True on success."""
    if len(stack) < 4:
        return False
    top3 = stack[-3:]
    m = _match([it[2] for it in top3])
    if m is not None:
        _cut(work, lab, stack, len(stack) - 3, m[1], strict=True)
        return True
    top4 = stack[-4:]
    m = _match([it[2] for it in top4])
    if m is None:
        return False
    for offset, parts in m:
        pos = len(stack) - 4 + offset
        a, b = stack[pos][0], stack[pos + 2][0]
        if a != b and frozenset((a, b)) not in work.edges:
            _cut(work, lab, stack, pos, parts, strict=False)
            return True
    # both diagonals exist: possible when the face walk repeats a vertex
    return False


def _cut(work: _Work, lab: AngleLabeling, stack: List[list], pos: int, parts, strict: bool) -> None:
    p, m, r = stack[pos], stack[pos + 1], stack[pos + 2]
    a, b = p[0], r[0]
    ta, tm, tb = parts
    assert tm == m[2], "middle angle of an ear must be kept"
    assert ta <= p[2] and tb <= r[2]
    if strict and not (0 < ta < p[2] or 0 < tb < r[2]):
        raise AssertionError("split at the large angle must be positive on both sides")
    work.add_edge(a, b)
    work.insert_after(a, p[1], b)
    work.insert_after(b, m[0], a)
    lab[(a, b)] = ta
    lab[(a, p[1])] = p[2] - ta
    lab[(b, m[0])] = tb
    lab[(b, a)] = r[2] - tb
    p[2] -= ta
    r[1], r[2] = a, r[2] - tb
    del stack[pos + 1]


# ---------------------------------------------------------------------------
# directional paths


_PATH_RULES = {
    # direction: (preferred quadrant, side, fallback quadrant, side)
    "up": (Quadrant.NW, "rightmost", Quadrant.NE, "leftmost"),
    "right": (Quadrant.SE, "leftmost", Quadrant.NE, "rightmost"),
    "down": (Quadrant.SE, "rightmost", Quadrant.SW, "leftmost"),
    "left": (Quadrant.NW, "leftmost", Quadrant.SW, "rightmost"),
}


def directional_path(g: PlaneGraph, q: QConstraints, v: Vertex, direction: str) -> List[Vertex]:
    """Walk from ``v`` in one direction until an external vertex is reached.

    Raises:
        StuckAtInternalVertex: an internal vertex has no neighbour to step to.
    """
    if direction not in _PATH_RULES:
        raise ValueError(f"direction must be one of {sorted(_PATH_RULES)}")
    first, side1, second, side2 = _PATH_RULES[direction]
    path = [v]
    seen = {v}
    while not g.is_external(path[-1]):
        u = path[-1]
        nxt = extreme_neighbor(g, q, u, first, side1)
        if nxt is None:
            nxt = extreme_neighbor(g, q, u, second, side2)
        if nxt is None or nxt in seen:
            raise StuckAtInternalVertex(f"cannot continue {direction} from {u!r}")
        path.append(nxt)
        seen.add(nxt)
    return path


# ---------------------------------------------------------------------------
# 180 degree angles


_DRAIN_ORDER = (Quadrant.NE, Quadrant.NW, Quadrant.SW, Quadrant.SE)


@dataclass
class Elimination:
    graph: PlaneGraph
    constraints: QConstraints
    subdivision: SubdivisionMap
    visits: List[Vertex] = field(default_factory=list)


class _QWork(_Work):
    """Working copy that also tracks quadrants and the outer face darts."""

    def __init__(self, g: PlaneGraph, q: QConstraints):
        super().__init__(g)
        self.q: Dict[Dart, Quadrant] = {d: q[d] for d in g.darts()}
        self.outer: Set[Dart] = set(g.faces[g.outer_face])

    def label(self, u: Vertex, v: Vertex, quadrant: Quadrant) -> None:
        self.q[(u, v)] = quadrant
        self.q[(v, u)] = quadrant.opposite

    def skip_angle(self, v: Vertex, empty: Quadrant) -> Optional[Tuple[Vertex, Vertex]]:
        """Consecutive neighbours ``(u, w)`` bounding an internal 180 angle over ``empty``."""
        rot = self.rot[v]
        before, after = empty.rotate(-1), empty.rotate(1)
        for i, u in enumerate(rot):
            w = rot[(i + 1) % len(rot)]
            if self.q[(v, u)] == before and self.q[(v, w)] == after and (v, w) not in self.outer:
                return u, w
        return None


def eliminate_180_angles(g: PlaneGraph, q: QConstraints, on_step: Optional[StepCallback] = None) -> Elimination:
    """Subdivide edges until no internal angle has category 180.

    Args:
        g: triangulated plane graph.
        q: constraints whose labeling on ``g`` is angular.
        on_step: called as ``on_step("subdivide", graph, labeling)`` after
            every subdivision.

    Raises:
        NotAngular: the labeling determined by ``q`` is not angular.
    """
    a = labeling_from_triangulated(g, q)
    if check_angular(g, a):
        raise NotAngular("labeling of the triangulated input is not angular")
    work = _QWork(g, q)
    sub = SubdivisionMap()
    fixed: Set[frozenset] = set()
    outer_dart = g.faces[g.outer_face][0]
    visits: List[Vertex] = []
    for _ in range(2):
        progress = False
        for empty in _DRAIN_ORDER:
            for v0 in list(work.vertices):
                if work.skip_angle(v0, empty) is None:
                    continue
                progress = True
                outer_dart = _drain_from(work, v0, empty, sub, fixed, outer_dart, visits, on_step)
        if not progress:
            break
    result = work.graph(outer_dart)
    q_plus = QConstraints(work.q)
    sub.dummy_vertices = set(result.vertices) - set(g.vertices)
    sub.dummy_edges = {frozenset(e) for e in result.edges()} - {frozenset(e) for e in g.edges()}
    return Elimination(result, q_plus, sub, visits)


def _drain_from(work: _QWork, v0, empty: Quadrant, sub, fixed, outer_dart, visits, on_step):
    stack = [v0]
    while stack:
        v = stack[-1]
        hit = work.skip_angle(v, empty)
        if hit is None:
            stack.pop()
            continue
        u, w = hit
        nxt = next((x for x in (u, w) if work.skip_angle(x, empty) is not None), None)
        if nxt is not None:
            if nxt in stack:
                raise AugmentError(f"witness recursion revisits {nxt!r}")
            stack.append(nxt)
            continue
        visits.append((v, empty))
        outer_dart = _subdivide(work, v, u, w, empty, sub, fixed, outer_dart)
        stack.pop()
        if on_step:
            g_now = work.graph(outer_dart)
            on_step("subdivide", g_now, _labeling_of(g_now, work.q))
    return outer_dart


def _subdivide(work: _QWork, v, u, w, empty: Quadrant, sub: SubdivisionMap, fixed, outer_dart):
    e = frozenset((u, w))
    if e in fixed:
        raise AugmentError(f"edge {u!r}-{w!r} would be subdivided twice")
    z = work.fresh("z")
    external = (u, w) in work.outer
    if external:
        work.add_vertex(z, [u, w, v])
    else:
        r = work.cw_next(w, u)
        work.add_vertex(z, [u, r, w, v])
    work.edges.discard(e)
    work.replace(u, w, z)
    work.replace(w, u, z)
    work.insert_after(v, u, z)
    for x, y in ((u, z), (z, w), (v, z)):
        work.add_edge(x, y)
    work.label(z, u, empty.rotate(-1))
    work.label(z, w, empty.rotate(1))
    work.label(z, v, empty.rotate(2))
    fixed.update({frozenset((u, z)), frozenset((z, w)), frozenset((v, z))})
    if external:
        work.outer.discard((u, w))
        work.outer.update({(u, z), (z, w)})
        if outer_dart in ((u, w), (w, u)):
            outer_dart = (u, z)
    else:
        work.insert_after(r, w, z)
        work.add_edge(z, r)
        work.label(z, r, empty)
        fixed.add(frozenset((z, r)))
    for d in ((u, w), (w, u)):
        work.q.pop(d, None)
    _record_subdivision(sub, u, w, z)
    return outer_dart


def _record_subdivision(sub: SubdivisionMap, u, w, z) -> None:
    sub.replacement[(u, w)] = (u, z, w)


def _labeling_of(g: PlaneGraph, q: Dict[Dart, Quadrant]) -> AngleLabeling:
    qc = q if isinstance(q, QConstraints) else QConstraints(q)
    out = AngleLabeling()
    outer = g.outer_face
    for ang in g.angles():
        if ang.first == ang.second:
            out[ang.first] = 360
            continue
        steps = quadrant_steps(qc[ang.first], qc[ang.second])
        if steps == 0:
            rot = g.rotation(ang.vertex)
            amb = all(qc[(ang.vertex, x)] == qc[ang.first] for x in rot)
            out[ang.first] = 360 if amb and ang.face == outer else 0
        else:
            out[ang.first] = 90 * steps
    return out


def labeling_from_constraints(g: PlaneGraph, q: QConstraints) -> AngleLabeling:
    """Labeling determined by ``q`` when every ambiguous vertex is external."""
    return _labeling_of(g, q)


# ---------------------------------------------------------------------------
# poles


_POLE_FOR_EMPTY = {Quadrant.NE: "east", Quadrant.NW: "north", Quadrant.SW: "west", Quadrant.SE: "south"}


@dataclass
class Quasi:
    graph: PlaneGraph
    constraints: QConstraints
    poles: PoleSet


def add_poles(g: PlaneGraph, q: QConstraints, on_step: Optional[StepCallback] = None) -> Quasi:
    """Add four poles so that every non-pole vertex has all quadrants filled.

    The outer face of the result is ``west, north, east, south`` in
    clockwise order.
    """
    work = _QWork(g, q)
    poles = PoleSet(work.fresh("wN"), work.fresh("wW"), work.fresh("wS"), work.fresh("wE"))
    walk = list(g.faces[g.outer_face])
    lab = _labeling_of(g, q)
    attach: Dict[Vertex, List[Vertex]] = {p: [] for p in poles.as_tuple()}
    for i, (v, s) in enumerate(walk):
        p = walk[i - 1][0]
        steps = lab[(v, p)] // 90
        start = q[(v, p)]
        anchor = p
        for k in range(1, steps):
            quad = start.rotate(k)
            pole = getattr(poles, _POLE_FOR_EMPTY[quad])
            work.insert_after(v, anchor, pole)
            anchor = pole
            work.label(v, pole, quad)
            work.edges.add(frozenset((v, pole)))
            attach[pole].append(i)
    ring = [poles.west, poles.north, poles.east, poles.south]
    n = len(walk)
    for j, pole in enumerate(ring):
        idx = attach[pole]
        if not idx:
            raise AugmentError(f"pole {pole!r} received no edges")
        idxs = set(idx)
        start = next((i for i in range(n) if i in idxs and (i - 1) % n not in idxs), None)
        if start is None:
            raise AugmentError("pole attachments wrap the whole outer face")
        run = []
        i = start
        while i in idxs:
            run.append(walk[i][0])
            i = (i + 1) % n
        if len(run) != len(idx):
            raise AugmentError(f"attachments of pole {pole!r} are not contiguous")
        work.add_vertex(pole, [ring[(j + 1) % 4], *reversed(run), ring[j - 1]])
    work.label(poles.west, poles.north, Quadrant.NE)
    work.label(poles.south, poles.west, Quadrant.NW)
    work.label(poles.east, poles.south, Quadrant.SW)
    work.label(poles.north, poles.east, Quadrant.SE)
    for x, y in zip(ring, ring[1:] + ring[:1]):
        work.edges.add(frozenset((x, y)))
    result = work.graph((poles.west, poles.north))
    qs = QConstraints(work.q)
    for f, walk_f in enumerate(result.faces):
        if f != result.outer_face and len(walk_f) != 3:
            raise AugmentError("pole stage left a non-triangular internal face")
    if len(result.faces[result.outer_face]) != 4:
        raise AugmentError("outer face of the pole stage is not the pole 4-cycle")
    if on_step:
        on_step("poles", result, _labeling_of(result, qs))
    return Quasi(result, qs, poles)
