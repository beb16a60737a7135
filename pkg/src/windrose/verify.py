"""Independent checks: geometric drawing verification and a brute-force labeling oracle."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from .drawing import Drawing
from .errors import CapExceeded, MissingGeometry
from .geometry import orient, pseudo_angle, segment_intersection
from .graph import PlaneGraph, QConstraints, Quadrant
from .labeling import AngleLabeling, check_angular


@dataclass
class VerificationReport:
    planarity_ok: bool = True
    monotonicity_ok: bool = True
    quadrants_ok: bool = True
    embedding_ok: bool = True
    violations: List[Tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.planarity_ok and self.monotonicity_ok and self.quadrants_ok and self.embedding_ok and not self.violations

    def add(self, flag: str, *violation) -> None:
        setattr(self, flag, False)
        self.violations.append(violation)


def verify_drawing(g: PlaneGraph, q: QConstraints, d: Drawing) -> VerificationReport:
    """Check that ``d`` is a windrose-planar drawing of ``(g, q)`` with g's embedding.

    Raises:
        MissingGeometry: a vertex has no point.
    """
    for v in g.vertices:
        if v not in d.points:
            raise MissingGeometry(f"no point for vertex {v!r}")
    rep = VerificationReport()
    edges = g.edges()
    lines = {e: d.polyline(*e) for e in edges}
    _check_monotone(lines, rep)
    _check_quadrants(g, q, d, rep)
    _check_planarity(g, d, lines, rep)
    _check_embedding(g, d, rep)
    return rep


def _check_monotone(lines, rep: VerificationReport) -> None:
    for e, pts in lines.items():
        for axis in (0, 1):
            steps = [pts[i + 1][axis] - pts[i][axis] for i in range(len(pts) - 1)]
            if not (all(s > 0 for s in steps) or all(s < 0 for s in steps)):
                rep.add("monotonicity_ok", "monotonicity", e, "xy"[axis])
                break


def _check_quadrants(g: PlaneGraph, q: QConstraints, d: Drawing, rep: VerificationReport) -> None:
    for u, v in g.darts():
        pu, pv = d.points[u], d.points[v]
        got = Quadrant.of_vector(pv[0] - pu[0], pv[1] - pu[1])
        if got != q[(u, v)]:
            rep.add("quadrants_ok", "quadrant", (u, v), q[(u, v)].name, got.name if got else None)


def _segments(g: PlaneGraph, d: Drawing, lines):
    """Segments as (edge index, position in polyline, last position, start, end)."""
    segs = []
    for k, (e, pts) in enumerate(lines.items()):
        for i in range(len(pts) - 1):
            segs.append((k, i, len(pts) - 2, pts[i], pts[i + 1]))
    return segs


def _allowed_touch(si, sj, edge_list, g) -> object:
    """The single point two segments may share, or None if they must be disjoint."""
    ki, ii, li, ai, bi = si
    kj, ij, lj, aj, bj = sj
    if ki == kj:
        if abs(ii - ij) == 1:
            return bi if ii < ij else ai
        return None
    ei, ej = edge_list[ki], edge_list[kj]
    shared = set(ei) & set(ej)
    if not shared:
        return None
    (x,) = shared
    end_i = ai if (ii == 0 and ei[0] == x) else bi if (ii == li and ei[1] == x) else None
    end_j = aj if (ij == 0 and ej[0] == x) else bj if (ij == lj and ej[1] == x) else None
    if end_i is not None and end_j is not None:
        return end_i
    return None


def _candidate_pairs(segs) -> List[Tuple[int, int]]:
    """Pairs that a vectorised prefilter cannot prove disjoint.

    Integer drawings use exact int64 arithmetic.  Other drawings use floats,
    and a pair is dropped only when every orientation sign that separates it
    clears a generous rounding margin.
    """
    coords = [(s[3][0], s[3][1], s[4][0], s[4][1]) for s in segs]
    n = len(segs)
    if n < 2:
        return []
    integral = all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1) for t in coords for c in t)
    if integral and max(abs(int(c)) for t in coords for c in t) < 2 ** 20:
        arr = np.array([[int(c) for c in t] for t in coords], dtype=np.int64)
        slack = 0
    else:
        arr = np.array([[float(c) for c in t] for t in coords], dtype=np.float64)
        slack = 1e-9
    ax, ay, bx, by = arr.T
    scale = float(np.abs(arr).max()) or 1.0
    pad = slack * scale
    margin = slack * scale * scale * 8
    xlo, xhi = np.minimum(ax, bx) - pad, np.maximum(ax, bx) + pad
    ylo, yhi = np.minimum(ay, by) - pad, np.maximum(ay, by) + pad
    out = []
    chunk = 256
    for start in range(0, n, chunk):
        sl = slice(start, min(n, start + chunk))
        meet = (xlo[sl, None] <= xhi[None, :]) & (xlo[None, :] <= xhi[sl, None])
        meet &= (ylo[sl, None] <= yhi[None, :]) & (ylo[None, :] <= yhi[sl, None])
        dx, dy = (bx - ax)[sl, None], (by - ay)[sl, None]
        o1 = dx * (ay[None, :] - ay[sl, None]) - dy * (ax[None, :] - ax[sl, None])
        o2 = dx * (by[None, :] - ay[sl, None]) - dy * (bx[None, :] - ax[sl, None])
        ex, ey = (bx - ax)[None, :], (by - ay)[None, :]
        o3 = ex * (ay[sl, None] - ay[None, :]) - ey * (ax[sl, None] - ax[None, :])
        o4 = ex * (by[sl, None] - ay[None, :]) - ey * (bx[sl, None] - ax[None, :])
        apart = ((o1 > margin) & (o2 > margin)) | ((o1 < -margin) & (o2 < -margin))
        apart |= ((o3 > margin) & (o4 > margin)) | ((o3 < -margin) & (o4 < -margin))
        meet &= ~apart
        rows, cols = np.nonzero(meet)
        rows = rows + start
        keep = rows < cols
        out.extend(zip(rows[keep].tolist(), cols[keep].tolist()))
    return out


def _meet_only_at(si, sj, p) -> bool:
    """Two segments with common endpoint ``p`` on distinct lines share nothing else."""
    a, b, c, d = si[3], si[4], sj[3], sj[4]
    if p not in (a, b) or p not in (c, d):
        return False
    return orient(a, b, c) != 0 or orient(a, b, d) != 0


def _check_planarity(g: PlaneGraph, d: Drawing, lines, rep: VerificationReport) -> None:
    seen: Dict[Tuple, object] = {}
    for v in g.vertices:
        p = (Fraction(d.points[v][0]), Fraction(d.points[v][1]))
        if p in seen:
            rep.add("planarity_ok", "coincident vertices", (seen[p], v))
        seen[p] = v
    edge_list = list(lines)
    segs = _segments(g, d, lines)
    for i, j in _candidate_pairs(segs):
        si, sj = segs[i], segs[j]
        allowed = _allowed_touch(si, sj, edge_list, g)
        if allowed is not None and _meet_only_at(si, sj, allowed):
            continue
        hit = segment_intersection(si[3], si[4], sj[3], sj[4])
        if hit is None:
            continue
        if hit[0] == "point" and allowed is not None and hit[1] == allowed:
            continue
        rep.add("planarity_ok", "crossing", (edge_list[si[0]], edge_list[sj[0]]))


def _check_embedding(g: PlaneGraph, d: Drawing, rep: VerificationReport) -> None:
    def first_dir(v, x):
        pts = d.polyline(v, x)
        return pseudo_angle(pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])

    for v in g.vertices:
        rot = g.rotation(v)
        if len(rot) < 3:
            continue
        got = sorted(rot, key=lambda x: first_dir(v, x), reverse=True)
        i = got.index(rot[0])
        if got[i:] + got[:i] != list(rot):
            rep.add("embedding_ok", "rotation", v)
    # the face just below the lowest vertex must be the outer face
    s = min(g.vertices, key=lambda v: (d.points[v][1], d.points[v][0]))
    rot = g.rotation(s)
    down = Fraction(3)
    for x in rot:
        y = g.cw_next(s, x)
        a, b = first_dir(s, x), first_dir(s, y)
        span = (a - b) % 4 or 4
        if (a - down) % 4 < span:
            if g.angle((s, x)).face != g.outer_face:
                rep.add("embedding_ok", "outer face", s)
            return


def brute_force_assignment_oracle(g: PlaneGraph, q: QConstraints, cap: int = 8) -> List[AngleLabeling]:
    """Every angular labeling induced by some large-angle assignment, by exhaustive search.

    Raises:
        CapExceeded: more than ``cap`` ambiguous vertices.
    """
    # categories are recomputed here from raw quadrant indices, independently of the labeling module
    order = {"NW": 0, "NE": 1, "SE": 2, "SW": 3}
    base = AngleLabeling()
    amb = []
    for v in g.vertices:
        rot = g.rotation(v)
        if len(rot) == 1:
            base[(v, rot[0])] = 360
            continue
        for i, x in enumerate(rot):
            y = rot[(i + 1) % len(rot)]
            base[(v, x)] = 90 * ((order[q[(v, y)].name] - order[q[(v, x)].name]) % 4)
        if len({q[(v, x)] for x in rot}) == 1:
            amb.append(v)
    if len(amb) > cap:
        raise CapExceeded(f"{len(amb)} ambiguous vertices exceed the cap of {cap}")
    out = []
    for combo in itertools.product(*[g.rotation(v) for v in amb]):
        a = AngleLabeling(base)
        for v, x in zip(amb, combo):
            a[(v, x)] = 360
        if not check_angular(g, a):
            out.append(a)
    return out
