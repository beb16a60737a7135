"""Plane graphs as rotation systems, quadrant constraints and directed views.

Conventions used throughout the package:

* ``rotation(v)`` lists the neighbours of ``v`` in clockwise order.
* A dart is an ordered pair ``(u, v)``; its twin is ``(v, u)``.
* The face successor of ``(u, v)`` is ``(v, w)`` where ``w`` follows ``u``
  clockwise around ``v``.  With this rule a bounded face is walked
  counterclockwise and the outer face clockwise.
* The angle with first dart ``(v, x)`` is bounded by ``(v, x)`` and its
  clockwise successor ``(v, y)``; it lies in the face of ``(v, y)``.  Angles
  are keyed by their first dart.
"""
from __future__ import annotations

import heapq
from collections import deque
from enum import IntEnum
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    BadWitness,
    GraphError,
    InconsistentRotation,
    MissingDartLabel,
    NotConnected,
    NotPlanar,
    ParallelEdge,
    SelfLoop,
)
from .geometry import pseudo_angle

Vertex = Hashable
Dart = Tuple[Vertex, Vertex]


class Quadrant(IntEnum):
    """The four open quadrants, numbered in clockwise order."""

    NW = 0
    NE = 1
    SE = 2
    SW = 3

    @property
    def opposite(self) -> "Quadrant":
        return Quadrant((self + 2) % 4)

    def rotate(self, steps: int) -> "Quadrant":
        """Quadrant reached after ``steps`` clockwise quarter turns."""
        return Quadrant((self + steps) % 4)

    @property
    def signs(self) -> Tuple[int, int]:
        return _SIGNS[self]

    @classmethod
    def of_vector(cls, dx, dy) -> Optional["Quadrant"]:
        """Open quadrant containing the vector, None on an axis."""
        if dx == 0 or dy == 0:
            return None
        if dy > 0:
            return cls.NE if dx > 0 else cls.NW
        return cls.SE if dx > 0 else cls.SW

    @classmethod
    def parse(cls, value) -> "Quadrant":
        if isinstance(value, Quadrant):
            return value
        try:
            return cls[str(value).upper()]
        except KeyError:
            raise ValueError(f"unknown quadrant {value!r}") from None

    def __str__(self) -> str:
        return self.name


_SIGNS = {Quadrant.NW: (-1, 1), Quadrant.NE: (1, 1), Quadrant.SE: (1, -1), Quadrant.SW: (-1, -1)}


def quadrant_steps(a: Quadrant, b: Quadrant) -> int:
    """Number of clockwise quarter turns from ``a`` to ``b`` (0..3)."""
    return (b - a) % 4


class Angle(NamedTuple):
    vertex: Vertex
    first: Dart
    second: Dart
    face: int


class PlaneGraph:
    """Connected simple plane graph given by a clockwise rotation system.

    Instances are immutable once built; all derived data (faces, positions
    inside rotations) is computed eagerly by the constructor.

    Args:
        vertices: vertex ids; their order is the canonical vertex order used
            for deterministic tie-breaking everywhere in the package.
        rotations: clockwise neighbour list of every vertex.
        outer_dart: any dart of the outer face.

    Raises:
        SelfLoop, ParallelEdge, InconsistentRotation, NotConnected,
        BadWitness, NotPlanar: on malformed input.
    """

    __slots__ = ("_vertices", "_index", "_rotation", "_pos", "_faces", "_face_of", "_outer", "_m")

    def __init__(self, vertices: Sequence[Vertex], rotations: Mapping[Vertex, Sequence[Vertex]], outer_dart: Dart):
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InconsistentRotation("duplicate vertex id")
        if set(rotations) != set(index):
            missing = set(index) ^ set(rotations)
            raise InconsistentRotation(f"rotation missing or extra for {sorted(map(repr, missing))}")
        if len(vertices) < 2:
            raise GraphError("a plane graph needs at least one edge")
        rotation: Dict[Vertex, Tuple[Vertex, ...]] = {}
        pos: Dict[Dart, int] = {}
        for v in vertices:
            rot = tuple(rotations[v])
            for i, x in enumerate(rot):
                if x == v:
                    raise SelfLoop(f"self-loop at {v!r}")
                if x not in index:
                    raise InconsistentRotation(f"{v!r} lists unknown neighbour {x!r}")
                if (v, x) in pos:
                    raise ParallelEdge(f"{x!r} listed twice around {v!r}")
                pos[(v, x)] = i
            rotation[v] = rot
        for (v, x) in pos:
            if (x, v) not in pos:
                raise InconsistentRotation(f"{x!r} is a neighbour of {v!r} but not vice versa")
        self._vertices = vertices
        self._index = index
        self._rotation = rotation
        self._pos = pos
        self._m = len(pos) // 2
        self._check_connected()
        faces: List[Tuple[Dart, ...]] = []
        face_of: Dict[Dart, int] = {}
        for d in self.darts():
            if d in face_of:
                continue
            walk = []
            e = d
            while e not in face_of:
                face_of[e] = len(faces)
                walk.append(e)
                e = self.face_successor(e)
            faces.append(tuple(walk))
        self._faces = tuple(faces)
        self._face_of = face_of
        if len(vertices) - self._m + len(faces) != 2:
            raise NotPlanar(f"Euler's formula fails: V={len(vertices)} E={self._m} F={len(faces)}")
        outer_dart = tuple(outer_dart)
        if outer_dart not in face_of:
            raise BadWitness(f"{outer_dart!r} is not a dart of the graph")
        self._outer = face_of[outer_dart]

    def _check_connected(self) -> None:
        start = self._vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for x in self._rotation[v]:
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        if len(seen) != len(self._vertices):
            raise NotConnected(f"{len(self._vertices) - len(seen)} vertices unreachable from {start!r}")

    # -- basic access -----------------------------------------------------
    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return self._vertices

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def __contains__(self, v) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return self._m

    def rotation(self, v: Vertex) -> Tuple[Vertex, ...]:
        return self._rotation[v]

    def rotations(self) -> Dict[Vertex, Tuple[Vertex, ...]]:
        return dict(self._rotation)

    def degree(self, v: Vertex) -> int:
        return len(self._rotation[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self._pos

    def darts(self) -> Iterator[Dart]:
        for v in self._vertices:
            for x in self._rotation[v]:
                yield (v, x)

    def edges(self) -> List[Dart]:
        """Every edge once, oriented by first appearance in dart order."""
        out = []
        for v, x in self.darts():
            if self._index[v] < self._index[x]:
                out.append((v, x))
        return out

    def cw_next(self, v: Vertex, x: Vertex) -> Vertex:
        rot = self._rotation[v]
        return rot[(self._pos[(v, x)] + 1) % len(rot)]

    def cw_prev(self, v: Vertex, x: Vertex) -> Vertex:
        rot = self._rotation[v]
        return rot[(self._pos[(v, x)] - 1) % len(rot)]

    def face_successor(self, d: Dart) -> Dart:
        u, v = d
        return (v, self.cw_next(v, u))

    # -- faces --------------------------------------------------------------
    @property
    def faces(self) -> Tuple[Tuple[Dart, ...], ...]:
        return self._faces

    @property
    def outer_face(self) -> int:
        return self._outer

    def face_of(self, d: Dart) -> int:
        return self._face_of[tuple(d)]

    def face_vertices(self, f: int) -> List[Vertex]:
        return [d[0] for d in self._faces[f]]

    def external_vertices(self) -> set:
        return {d[0] for d in self._faces[self._outer]}

    def is_external(self, v: Vertex) -> bool:
        return any(self._face_of[(v, x)] == self._outer for x in self._rotation[v])

    # -- angles -------------------------------------------------------------
    def angle(self, first: Dart) -> Angle:
        v, x = first
        second = (v, self.cw_next(v, x))
        return Angle(v, (v, x), second, self._face_of[second])

    def angles(self) -> List[Angle]:
        return [self.angle(d) for d in self.darts()]

    def angles_at(self, v: Vertex) -> List[Angle]:
        return [self.angle((v, x)) for x in self._rotation[v]]

    def face_angles(self, f: int) -> List[Dart]:
        """Keys of the angles of face ``f`` in walk order."""
        return [(v, self.cw_prev(v, w)) for v, w in self._faces[f]]

    def __repr__(self) -> str:
        return f"PlaneGraph(n={len(self._vertices)}, m={self._m}, faces={len(self._faces)})"


def build_plane_graph(vertices: Sequence[Vertex], rotations: Mapping[Vertex, Sequence[Vertex]], outer_face_witness: Dart) -> PlaneGraph:
    """Validate a rotation system and wrap it in a :class:`PlaneGraph`."""
    return PlaneGraph(vertices, rotations, outer_face_witness)


def extract_faces(g: PlaneGraph) -> List[List[Dart]]:
    """Facial walks of ``g`` as lists of darts (orbits of the face successor)."""
    return [list(f) for f in g.faces]


class QConstraints(Mapping):
    """Quadrant label of every dart: ``q[(u, v)]`` is the quadrant of ``u`` containing ``v``."""

    def __init__(self, labels: Mapping[Dart, object]):
        self._q: Dict[Dart, Quadrant] = {tuple(d): Quadrant.parse(x) for d, x in labels.items()}
        self._by_vertex: Dict[Vertex, Dict[Vertex, Quadrant]] = {}
        for (u, v), x in self._q.items():
            self._by_vertex.setdefault(u, {})[v] = x

    @classmethod
    def from_edges(cls, labels: Mapping[Dart, object]) -> "QConstraints":
        """Build from one label per edge, filling twins with the opposite quadrant."""
        full = {}
        for (u, v), x in labels.items():
            x = Quadrant.parse(x)
            full[(u, v)] = x
            full.setdefault((v, u), x.opposite)
        return cls(full)

    @classmethod
    def from_points(cls, points: Mapping[Vertex, Tuple], edges: Iterable[Dart]) -> "QConstraints":
        labels = {}
        for u, v in edges:
            x = Quadrant.of_vector(points[v][0] - points[u][0], points[v][1] - points[u][1])
            if x is None:
                raise ValueError(f"edge {(u, v)!r} is axis-parallel")
            labels[(u, v)] = x
            labels[(v, u)] = x.opposite
        return cls(labels)

    def __getitem__(self, d: Dart) -> Quadrant:
        return self._q[tuple(d)]

    def __iter__(self):
        return iter(self._q)

    def __len__(self) -> int:
        return len(self._q)

    def neighbours(self, v: Vertex) -> Dict[Vertex, Quadrant]:
        return self._by_vertex.get(v, {})

    def in_quadrant(self, v: Vertex, quadrant: Quadrant) -> List[Vertex]:
        return [x for x, q in self.neighbours(v).items() if q == quadrant]

    def is_ambiguous(self, v: Vertex) -> bool:
        labels = set(self.neighbours(v).values())
        return len(self.neighbours(v)) >= 2 and len(labels) == 1

    def updated(self, labels: Mapping[Dart, object]) -> "QConstraints":
        merged = dict(self._q)
        merged.update({tuple(d): Quadrant.parse(x) for d, x in labels.items()})
        return QConstraints(merged)

    def __repr__(self) -> str:
        return f"QConstraints({len(self._q)} darts)"


def require_labels(g: PlaneGraph, q: QConstraints) -> None:
    for d in g.darts():
        if d not in q:
            raise MissingDartLabel(f"no quadrant for dart {d!r}")


def check_q_consistency(g: PlaneGraph, q: QConstraints) -> List[Tuple[str, object]]:
    """All violations of twin consistency and of the clockwise quadrant order.

    Returns an empty list when ``q`` is consistent.  Violations are
    ``("twin", dart)`` and ``("rotation", vertex)``.
    """
    require_labels(g, q)
    violations: List[Tuple[str, object]] = []
    for u, v in g.edges():
        if q[(v, u)] != q[(u, v)].opposite:
            violations.append(("twin", (u, v)))
    for v in g.vertices:
        if rotation_turns(g, q, v) > 1:
            violations.append(("rotation", v))
    return violations


def rotation_turns(g: PlaneGraph, q: QConstraints, v: Vertex) -> int:
    """Full clockwise turns made by the quadrant labels around ``v``.

    0 when all labels agree, 1 when the labels form a cyclic subsequence of
    NW, NE, SE, SW, larger otherwise.
    """
    rot = g.rotation(v)
    steps = sum(quadrant_steps(q[(v, rot[i])], q[(v, rot[(i + 1) % len(rot)])]) for i in range(len(rot)))
    return steps // 4


class DirectedView(NamedTuple):
    axis: str
    orientation: Dict[Dart, Dart]

    def successors(self) -> Dict[Vertex, List[Vertex]]:
        out: Dict[Vertex, List[Vertex]] = {}
        for tail, head in self.orientation.values():
            out.setdefault(tail, []).append(head)
        return out


_FORWARD = {
    "vertical": (Quadrant.NE, Quadrant.NW),
    "horizontal": (Quadrant.NE, Quadrant.SE),
}


def directed_view(g: PlaneGraph, q: QConstraints, axis: str) -> DirectedView:
    """Orient every edge upward (``vertical``) or rightward (``horizontal``)."""
    if axis not in _FORWARD:
        raise ValueError(f"axis must be 'vertical' or 'horizontal', not {axis!r}")
    forward = _FORWARD[axis]
    orientation = {}
    for u, v in g.edges():
        orientation[(u, v)] = (u, v) if q[(u, v)] in forward else (v, u)
    return DirectedView(axis, orientation)


def topological_order(g: PlaneGraph, view: DirectedView) -> Optional[List[Vertex]]:
    """Kahn's algorithm with a min-index ready queue; None if the view has a cycle."""
    indeg = {v: 0 for v in g.vertices}
    succ = view.successors()
    for _, head in view.orientation.values():
        indeg[head] += 1
    heap = [g.index(v) for v, d in indeg.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = g.vertices[heapq.heappop(heap)]
        order.append(v)
        for w in succ.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, g.index(w))
    return order if len(order) == len(g) else None


def is_bi_acyclic(g: PlaneGraph, q: QConstraints) -> bool:
    return all(topological_order(g, directed_view(g, q, axis)) is not None for axis in ("vertical", "horizontal"))


def find_directed_cycle(g: PlaneGraph, view: DirectedView) -> Optional[List[Vertex]]:
    """Some directed cycle of the view as a vertex list, or None."""
    succ = view.successors()
    colour: Dict[Vertex, int] = {}
    for root in g.vertices:
        if root in colour:
            continue
        stack = [(root, iter(succ.get(root, ())))]
        path = [root]
        colour[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if colour.get(w) == 1:
                    return path[path.index(w):]
                if w not in colour:
                    colour[w] = 1
                    path.append(w)
                    stack.append((w, iter(succ.get(w, ()))))
                    break
            else:
                colour[v] = 2
                path.pop()
                stack.pop()
    return None


def extreme_neighbor(g: PlaneGraph, q: QConstraints, v: Vertex, quadrant, side: str, labeling: Optional[Mapping[Dart, int]] = None) -> Optional[Vertex]:
    """Leftmost (first clockwise) or rightmost (last clockwise) neighbour of ``v`` in a quadrant.

    When every neighbour of ``v`` lies in ``quadrant`` the clockwise run
    starts after the large angle of ``v``: taken from ``labeling`` if given,
    otherwise from the outer face.
    """
    quadrant = Quadrant.parse(quadrant)
    if side not in ("leftmost", "rightmost"):
        raise ValueError("side must be 'leftmost' or 'rightmost'")
    rot = g.rotation(v)
    n = len(rot)
    labels = [q[(v, x)] for x in rot]
    if quadrant not in labels:
        return None
    if all(lab == quadrant for lab in labels):
        start = _run_start_after_large_angle(g, v, labeling) % n
    else:
        start = next(i for i in range(n) if labels[i] == quadrant and labels[i - 1] != quadrant)
    end = start
    while labels[(end + 1) % n] == quadrant and (end + 1) % n != start:
        end += 1
    return rot[start % n] if side == "leftmost" else rot[end % n]


def _run_start_after_large_angle(g: PlaneGraph, v: Vertex, labeling) -> int:
    rot = g.rotation(v)
    if labeling is not None:
        for i, x in enumerate(rot):
            if labeling.get((v, x)) == 360:
                return i + 1
    for i, x in enumerate(rot):
        if g.angle((v, x)).face == g.outer_face:
            return i + 1
    return 0


def plane_graph_from_drawing(points: Mapping[Vertex, Tuple], edges: Iterable[Dart], vertices: Optional[Sequence[Vertex]] = None) -> PlaneGraph:
    """Plane graph whose embedding is the one of a straight-line drawing.

    Rotations come from sorting edge directions clockwise; the outer face is
    the face below the lowest vertex.
    """
    if vertices is None:
        vertices = list(points)
    adj: Dict[Vertex, List[Vertex]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)

    def key(v, x):
        return pseudo_angle(points[x][0] - points[v][0], points[x][1] - points[v][1])

    rotations = {v: sorted(adj[v], key=lambda x: key(v, x), reverse=True) for v in vertices}
    s = min(vertices, key=lambda v: (points[v][1], points[v][0]))
    rot = rotations[s]
    witness = None
    for i, a in enumerate(rot):
        b = rot[(i + 1) % len(rot)]
        pa, pb = key(s, a), key(s, b)
        span = (pa - pb) % 4 or 4
        if (pa - 3) % 4 < span:
            witness = (s, b)
            break
    return PlaneGraph(vertices, rotations, witness)
