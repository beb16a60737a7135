"""Angle categories, angular labelings and the large-angle assignment.

A labeling maps angle keys (first darts, see :mod:`windrose.graph`) to a
category in degrees.  A labeling is *angular* when every vertex sums to 360
and every facial walk of length ``k`` sums to ``180k - 360`` (bounded faces)
or ``180k + 360`` (outer face).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .errors import (
    FractionalDemand,
    InconsistentPropagation,
    InternalAmbiguousVertex,
    NegativeDemand,
    NotTriangulated,
)
from .graph import Angle, Dart, PlaneGraph, QConstraints, Quadrant, Vertex, quadrant_steps, require_labels

CATEGORIES = (0, 90, 180, 270, 360)
AMBIGUOUS = "ambiguous"


class AngleLabeling(dict):
    """Map from angle key (first dart) to category in degrees."""

    def at(self, g: PlaneGraph, v: Vertex) -> List[int]:
        return [self[(v, x)] for x in g.rotation(v)]


def angle_category_between(q: QConstraints, angle: Angle):
    """Category of an angle determined by the quadrants of its two darts.

    Returns 360 for the single angle of a degree-1 vertex and ``AMBIGUOUS``
    when both darts carry the same quadrant.
    """
    if angle.first == angle.second:
        return 360
    steps = quadrant_steps(q[angle.first], q[angle.second])
    return AMBIGUOUS if steps == 0 else 90 * steps


def face_target(g: PlaneGraph, f: int) -> int:
    k = len(g.faces[f])
    return 180 * k + (360 if f == g.outer_face else -360)


def check_angular(g: PlaneGraph, a: Mapping[Dart, int]) -> List[Tuple]:
    """All violations of the vertex and face angle sums; empty when angular.

    Violations are ``("category", key, value)``, ``("vertex", v, total)`` and
    ``("face", f, total, target)``.
    """
    violations: List[Tuple] = []
    for d in g.darts():
        if a.get(d) not in CATEGORIES:
            violations.append(("category", d, a.get(d)))
    if violations:
        return violations
    for v in g.vertices:
        total = sum(a[(v, x)] for x in g.rotation(v))
        if total != 360:
            violations.append(("vertex", v, total))
    for f in range(len(g.faces)):
        total = sum(a[key] for key in g.face_angles(f))
        target = face_target(g, f)
        if total != target:
            violations.append(("face", f, total, target))
    return violations


def ambiguous_vertices(g: PlaneGraph, q: QConstraints) -> List[Vertex]:
    """Vertices of degree at least 2 whose neighbours share one quadrant, in vertex order."""
    out = []
    for v in g.vertices:
        rot = g.rotation(v)
        if len(rot) >= 2 and all(q[(v, x)] == q[(v, rot[0])] for x in rot):
            out.append(v)
    return out


def base_categories(g: PlaneGraph, q: QConstraints) -> AngleLabeling:
    """Determined categories, with every equal-quadrant angle set to 0."""
    require_labels(g, q)
    a = AngleLabeling()
    for ang in g.angles():
        c = angle_category_between(q, ang)
        a[ang.first] = 0 if c == AMBIGUOUS else c
    return a


def labeling_from_triangulated(g: PlaneGraph, q: QConstraints) -> AngleLabeling:
    """The only candidate angular labeling of a triangulated instance.

    Ambiguous vertices take 360 on their outer angle; face sums are
    not checked here.

    Raises:
        NotTriangulated: some face is not a triangle.
        InternalAmbiguousVertex: an internal vertex has all neighbours in one quadrant.
    """
    if any(len(f) != 3 for f in g.faces):
        raise NotTriangulated("every face, including the outer one, must be a triangle")
    a = base_categories(g, q)
    outer = g.outer_face
    for v in ambiguous_vertices(g, q):
        keys = [k for k in (g.angle((v, x)) for x in g.rotation(v)) if k.face == outer]
        if not keys:
            raise InternalAmbiguousVertex(v)
        a[keys[0].first] = 360
    return a


def face_demands(g: PlaneGraph, q: QConstraints) -> Dict[int, int]:
    """Number of 360 angles each face must receive from ambiguous vertices.

    Raises:
        NegativeDemand: the determined angles already exceed the face target.
        FractionalDemand: the remainder is not a multiple of 360.
    """
    a = base_categories(g, q)
    demands = {}
    for f in range(len(g.faces)):
        rest = face_target(g, f) - sum(a[key] for key in g.face_angles(f))
        if rest % 360:
            raise FractionalDemand(f, rest, f"face {f} is off by {rest} degrees, not a multiple of 360")
        if rest < 0:
            raise NegativeDemand(f, rest, f"face {f} is over-full by {-rest} degrees")
        demands[f] = rest // 360
    return demands


@dataclass
class AssignmentResult:
    """Outcome of the large-angle assignment search.

    Attributes:
        labeling: the angular labeling, or None when none exists.
        choice: ambiguous vertex -> key of its 360 angle.
        certificate: why no labeling exists (empty on success).
    """

    labeling: Optional[AngleLabeling]
    choice: Dict[Vertex, Dart] = field(default_factory=dict)
    certificate: Dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.labeling is not None


def solve_large_angle_assignment(g: PlaneGraph, q: QConstraints) -> AssignmentResult:
    """Find an angular labeling through a bipartite flow, with a certificate on failure."""
    try:
        demands = face_demands(g, q)
    except (NegativeDemand, FractionalDemand) as exc:
        kind = "negative demand" if isinstance(exc, NegativeDemand) else "fractional demand"
        return AssignmentResult(None, certificate={"kind": kind, "face": _face_ids(g, exc.face), "degrees": exc.value})
    amb = ambiguous_vertices(g, q)
    need = sum(demands.values())
    if need != len(amb):
        return AssignmentResult(None, certificate={"kind": "demand mismatch", "total_demand": need, "ambiguous_vertices": len(amb)})
    base = base_categories(g, q)
    choice: Dict[Vertex, Dart] = {}
    if amb:
        choice = _flow_assignment(g, amb, demands)
        if choice is None:
            return AssignmentResult(None, certificate={"kind": "flow", "ambiguous_vertices": len(amb), "total_demand": need})
    a = AngleLabeling(base)
    for key in choice.values():
        a[key] = 360
    bad = check_angular(g, a)
    if bad:
        return AssignmentResult(None, certificate={"kind": "not angular", "violations": [list(map(_jsonable, v)) for v in bad[:5]]})
    return AssignmentResult(a, choice)


def _flow_assignment(g: PlaneGraph, amb: List[Vertex], demands: Dict[int, int]) -> Optional[Dict[Vertex, Dart]]:
    nb, nf = len(amb), len(g.faces)
    source, sink = 0, nb + nf + 1
    rows, cols, caps = [], [], []
    first_key: Dict[Tuple[int, int], Dart] = {}
    for i, v in enumerate(amb, start=1):
        rows.append(source), cols.append(i), caps.append(1)
        for x in g.rotation(v):
            ang = g.angle((v, x))
            if (i, ang.face) not in first_key:
                first_key[(i, ang.face)] = ang.first
                rows.append(i), cols.append(nb + 1 + ang.face), caps.append(1)
    for f, d in demands.items():
        if d:
            rows.append(nb + 1 + f), cols.append(sink), caps.append(d)
    size = sink + 1
    cap = csr_matrix((np.array(caps, dtype=np.int32), (rows, cols)), shape=(size, size))
    res = maximum_flow(cap, source, sink, method="dinic")
    if res.flow_value != nb:
        return None
    flow = res.flow.tocoo()
    choice = {}
    for r, c, val in zip(flow.row, flow.col, flow.data):
        if val > 0 and 1 <= r <= nb and c > nb and c != sink:
            choice[amb[r - 1]] = first_key[(int(r), int(c) - nb - 1)]
    return {v: choice[v] for v in amb}


def find_large_angle_assignment(g: PlaneGraph, q: QConstraints) -> Optional[AngleLabeling]:
    """Angular labeling induced by some large-angle assignment, or None."""
    return solve_large_angle_assignment(g, q).labeling


def labeling_for_choice(g: PlaneGraph, q: QConstraints, choice: Mapping[Vertex, Dart]) -> AngleLabeling:
    """Labeling induced by a large-angle assignment (not checked)."""
    a = base_categories(g, q)
    for key in choice.values():
        a[key] = 360
    return a


def constraints_from_labeling(g: PlaneGraph, a: Mapping[Dart, int], anchor: Dart, anchor_quadrant) -> QConstraints:
    """Propagate quadrants from one anchored dart through an angular labeling.

    Raises:
        InconsistentPropagation: two propagation routes disagree.
    """
    anchor = tuple(anchor)
    q: Dict[Dart, Quadrant] = {anchor: Quadrant.parse(anchor_quadrant)}
    stack = [anchor]

    def assign(d, value):
        old = q.get(d)
        if old is None:
            q[d] = value
            stack.append(d)
        elif old != value:
            raise InconsistentPropagation(f"dart {d!r} would get both {old.name} and {value.name}")

    while stack:
        d = stack.pop()
        v, x = d
        val = q[d]
        assign((x, v), val.opposite)
        assign((v, g.cw_next(v, x)), val.rotate(a[d] // 90))
        prev = g.cw_prev(v, x)
        assign((v, prev), val.rotate(-(a[(v, prev)] // 90)))
    return QConstraints(q)


def refinement_violations(g_old: PlaneGraph, a_old: Mapping[Dart, int], g_new: PlaneGraph, a_new: Mapping[Dart, int]) -> List[Tuple]:
    """Old angles whose clockwise sub-angles in the new graph do not sum to the old value.

    An old edge missing from ``g_new`` is taken to be subdivided; its dart is
    followed to the new vertex adjacent to both endpoints.
    """
    old_vertices = set(g_old.vertices)

    def image(v, x):
        if g_new.has_edge(v, x):
            return x
        return next(z for z in g_new.rotation(v) if z not in old_vertices and g_new.has_edge(z, x))

    bad = []
    for v in g_old.vertices:
        for x in g_old.rotation(v):
            start, stop = image(v, x), image(v, g_old.cw_next(v, x))
            total, z = a_new[(v, start)], g_new.cw_next(v, start)
            while z != stop:
                total += a_new[(v, z)]
                z = g_new.cw_next(v, z)
            if total != a_old[(v, x)]:
                bad.append((v, x, a_old[(v, x)], total))
    return bad


def _face_ids(g: PlaneGraph, f: int) -> List:
    return [str(v) for v in g.face_vertices(f)]


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x if isinstance(x, (int, str, float)) or x is None else str(x)
