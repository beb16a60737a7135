"""Instance generators: random yes-instances, the nested-triangle family and fixed fixtures."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.spatial import Delaunay
from scipy.spatial import QhullError

from .errors import WindroseError
from .geometry import segment_intersection
from .graph import PlaneGraph, QConstraints, build_plane_graph, plane_graph_from_drawing


class BadParams(WindroseError, ValueError):
    pass


@dataclass
class Instance:
    """A q-constrained plane graph, optionally with the drawing it was read from."""

    graph: PlaneGraph
    constraints: QConstraints
    points: Optional[Dict[str, Tuple]] = None
    name: str = ""


def _from_points(points: Dict[str, Tuple], edges: List[Tuple[str, str]], name: str) -> Instance:
    g = plane_graph_from_drawing(points, edges, list(points))
    return Instance(g, QConstraints.from_points(points, edges), dict(points), name)


def delaunay(n: int, seed: int = 0) -> Instance:
    """Delaunay triangulation of ``n`` random points with distinct x and distinct y."""
    if n < 3:
        raise BadParams("delaunay needs n >= 3")
    rng = np.random.default_rng(seed)
    while True:
        xs = rng.permutation(4 * n)[:n]
        ys = rng.permutation(4 * n)[:n]
        pts = np.column_stack([xs, ys])
        try:
            tri = Delaunay(pts)
        except QhullError:
            continue
        if len(tri.coplanar):
            continue
        break
    names = [f"v{i}" for i in range(n)]
    edges = set()
    for simplex in tri.simplices:
        for i in range(3):
            a, b = sorted((int(simplex[i]), int(simplex[(i + 1) % 3])))
            edges.add((a, b))
    points = {names[i]: (int(xs[i]), int(ys[i])) for i in range(n)}
    return _from_points(points, [(names[a], names[b]) for a, b in sorted(edges)], f"delaunay-{n}-{seed}")


def _nw_se_around(box) -> List[Tuple[int, int]]:
    """Triangle with pairwise NW-SE edges strictly enclosing an axis box."""
    x0, y0, x1, y1 = box
    w, h = x1 - x0, y1 - y0
    return [(x0 - h - 3, y1 + 2), (x1 + 1, y1 + 1), (x1 + 2, y0 - w - 3)]


def _box(points) -> Tuple[int, int, int, int]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def nested_triangles(k: int) -> Instance:
    """``k`` nested triangles, alternately NE-SW and NW-SE, joined corner to corner."""
    if k < 1:
        raise BadParams("nested-triangles needs k >= 1")
    layers = [[(0, 0), (3, 1), (4, 4)]]
    for i in range(1, k):
        x0, y0, x1, y1 = _box(layers[-1])
        if i % 2:
            layers.append(_nw_se_around((x0, y0, x1, y1)))
        else:
            mirrored = _nw_se_around((-x1, y0, -x0, y1))
            layers.append([(-x, y) for x, y in mirrored])
    points: Dict[str, Tuple[int, int]] = {}
    edges: List[Tuple[str, str]] = []
    for i, layer in enumerate(layers):
        names = [f"t{i}_{j}" for j in range(3)]
        points.update(zip(names, layer))
        edges += [(names[0], names[1]), (names[1], names[2]), (names[0], names[2])]
    for i in range(k - 1):
        edges += _nesting_edges(points, edges, i)
    return _from_points(points, edges, f"nested-triangles-{k}")


def _nesting_edges(points, edges, i) -> List[Tuple[str, str]]:
    inner = [f"t{i}_{j}" for j in range(3)]
    outer = [f"t{i + 1}_{j}" for j in range(3)]
    for shift in range(3):
        cand = [(inner[j], outer[(j + shift) % 3]) for j in range(3)]
        if _straight_planar(points, edges + cand):
            return cand
    for perm in permutations(range(3)):
        cand = [(inner[j], outer[perm[j]]) for j in range(3)]
        if _straight_planar(points, edges + cand):
            return cand
    raise BadParams("no planar corner matching between consecutive triangles")


def _straight_planar(points, edges) -> bool:
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            (u, v), (x, y) = edges[a], edges[b]
            pu, pv, px, py = points[u], points[v], points[x], points[y]
            if pu[0] == pv[0] or pu[1] == pv[1]:
                return False
            hit = segment_intersection(pu, pv, px, py)
            if hit is None:
                continue
            shared = {u, v} & {x, y}
            if hit[0] == "point" and len(shared) == 1 and hit[1] == points[shared.pop()]:
                continue
            return False
    return True


def apollonian(n: int, seed: int = 0) -> Instance:
    """Random planar 3-tree on ``n`` vertices with exact rational geometry."""
    if n < 3:
        raise BadParams("apollonian needs n >= 3")
    rng = np.random.default_rng(seed)
    pts: Dict[str, Tuple[Fraction, Fraction]] = {
        "p0": (Fraction(0), Fraction(0)),
        "p1": (Fraction(7), Fraction(10)),
        "p2": (Fraction(10), Fraction(3)),
    }
    faces = [("p0", "p1", "p2")]
    edges = [("p0", "p1"), ("p1", "p2"), ("p0", "p2")]
    for k in range(3, n):
        i = int(rng.integers(len(faces)))
        tri = faces[i]
        while True:
            w = [int(x) for x in rng.integers(1, 10, size=3)]
            s = sum(w)
            p = tuple(sum(wi * pts[c][axis] for wi, c in zip(w, tri)) / s for axis in (0, 1))
            if all(p[0] != o[0] and p[1] != o[1] for o in pts.values()):
                break
        name = f"p{k}"
        pts[name] = p
        edges += [(c, name) for c in tri]
        a, b, c = tri
        faces[i:i + 1] = [(a, b, name), (b, c, name), (a, c, name)]
    return _from_points(pts, edges, f"apollonian-{n}-{seed}")


def triangle() -> Instance:
    """T1: u=(0,0), v=(1,2), w=(2,1)."""
    return _from_points({"u": (0, 0), "v": (1, 2), "w": (2, 1)}, [("u", "v"), ("u", "w"), ("v", "w")], "triangle")


def path_ambiguous() -> Instance:
    """P2: both neighbours of the middle vertex lie in its NE quadrant."""
    return _from_points({"v": (0, 0), "u": (1, 2), "w": (2, 1)}, [("v", "u"), ("v", "w")], "path-ambiguous")


def cyclic_triangle() -> Instance:
    """T2: v NE of u, w NE of v, u NE of w; not windrose-planar."""
    g = build_plane_graph(["u", "v", "w"], {"u": ["v", "w"], "v": ["w", "u"], "w": ["u", "v"]}, ("u", "v"))
    q = QConstraints.from_edges({("u", "v"): "NE", ("v", "w"): "NE", ("w", "u"): "NE"})
    return Instance(g, q, None, "cyclic-triangle")


def k4_apex() -> Instance:
    """K4 with apex v inside triangle (a, b, c)."""
    pts = {"v": (0, 0), "a": (-1, 2), "b": (2, -1), "c": (-2, -2)}
    edges = [("v", "a"), ("v", "b"), ("v", "c"), ("a", "b"), ("b", "c"), ("c", "a")]
    return _from_points(pts, edges, "k4-apex")


FIXED = {
    "triangle": triangle,
    "path-ambiguous": path_ambiguous,
    "cyclic-triangle": cyclic_triangle,
    "k4-apex": k4_apex,
}
SIZED = {"delaunay": delaunay, "apollonian": apollonian}


def generate(kind: str, param: Optional[int] = None, seed: int = 0) -> Instance:
    """Dispatch by kind name, as used by the command line."""
    if kind in FIXED:
        return FIXED[kind]()
    if kind == "nested-triangles":
        if param is None:
            raise BadParams("nested-triangles needs k")
        return nested_triangles(param)
    if kind in SIZED:
        if param is None:
            raise BadParams(f"{kind} needs n")
        return SIZED[kind](param, seed)
    raise BadParams(f"unknown kind {kind!r}; choose from {sorted([*FIXED, *SIZED, 'nested-triangles'])}")
