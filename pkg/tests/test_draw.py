"""Grid drawings, bend recovery, the pipeline and the 3-tree construction."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from windrose.augment import SubdivisionMap
from windrose.draw import collapse_to_one_bend, is_quasi_triangulated, quasi_triangulated_drawing, straight_line_drawing, windrose_pipeline
from windrose.drawing import Drawing
from windrose.errors import BlockStructureUnsupported, StyleUnavailable
from windrose.generators import apollonian, delaunay
from windrose.graph import QConstraints, Quadrant, build_plane_graph, plane_graph_from_drawing
from windrose.treeblocks import three_tree_block_drawing
from windrose.verify import verify_drawing

from _support import cycle4_graph, drawn_subgraph, fixture


def shoelace(pts):
    return sum(pts[i - 1][0] * pts[i][1] - pts[i][0] * pts[i - 1][1] for i in range(len(pts)))


def square_with_centre():
    pts = {"W": (0, 2), "N": (2, 6), "E": (6, 4), "S": (4, 0), "x": (3, 3)}
    edges = [("W", "N"), ("N", "E"), ("E", "S"), ("S", "W"), ("x", "W"), ("x", "N"), ("x", "E"), ("x", "S")]
    return plane_graph_from_drawing(pts, edges), QConstraints.from_points(pts, edges)


def test_square_with_centre_draws_and_verifies():
    g, q = square_with_centre()
    assert is_quasi_triangulated(g, q)
    d = quasi_triangulated_drawing(g, q)
    assert verify_drawing(g, q, d).ok
    assert d.points["W"][0] == 0 and d.points["E"][0] == len(g) - 1


def pipeline_quasi(n, seed):
    g, q, _ = drawn_subgraph(n, seed)
    res = windrose_pipeline(g, q)
    return res.stages["poles"], res.stages["drawing_star"]


@settings(max_examples=20, deadline=None)
@given(st.integers(5, 60), st.integers(0, 10**6))
def test_quasi_drawing_properties(n, seed):
    quasi, d = pipeline_quasi(n, seed)
    g, q, p = quasi.graph, quasi.constraints, quasi.poles
    m = len(g)
    assert d.points[p.west][0] == 0 and d.points[p.east][0] == m - 1
    assert d.points[p.south][1] == 0 and d.points[p.north][1] == m - 1
    assert verify_drawing(g, q, d).ok and not d.bends
    # internal walks are counterclockwise in the drawing
    for f, walk in enumerate(g.faces):
        area = shoelace([d.points[v] for v, _ in walk])
        assert area < 0 if f == g.outer_face else area > 0


@settings(max_examples=20, deadline=None)
@given(st.integers(5, 60), st.integers(0, 10**6))
def test_zero_apex_face_order(n, seed):
    quasi, d = pipeline_quasi(n, seed)
    g, q = quasi.graph, quasi.constraints
    from windrose.augment import labeling_from_constraints

    a = labeling_from_constraints(g, q)
    x = {v: p[0] for v, p in d.points.items()}
    y = {v: p[1] for v, p in d.points.items()}
    for f in range(len(g.faces)):
        if f == g.outer_face:
            continue
        for key in g.face_angles(f):
            u = key[0]
            nb = [t for s, t in g.faces[f] if s == u] + [s for s, t in g.faces[f] if t == u]
            v, w = nb[0], nb[1]
            if a[key] == 0 and q[(u, v)] == q[(u, w)] == Quadrant.NE:
                if q[(w, v)] != Quadrant.SE:
                    v, w = w, v
                assert x[u] < x[w] < x[v] and y[u] < y[v] < y[w]


def test_collapse_bends_at_subdivision_vertex():
    g = build_plane_graph(["u", "w"], {"u": ["w"], "w": ["u"]}, ("u", "w"))
    d_star = Drawing({"u": (0, 0), "z": (3, 5), "w": (4, 6)}, {})
    sub = SubdivisionMap(replacement={("u", "w"): ("u", "z", "w")})
    d = collapse_to_one_bend(g, d_star, sub)
    assert d.polyline("u", "w") == [(0, 0), (3, 5), (4, 6)]
    assert d.polyline("w", "u") == [(4, 6), (3, 5), (0, 0)]
    plain = collapse_to_one_bend(g, d_star, SubdivisionMap())
    assert plain.bend_count("u", "w") == 0


def test_pipeline_k4():
    g, q = fixture("k4-fixture.json")
    res = windrose_pipeline(g, q)
    assert res.planar and verify_drawing(g, q, res.drawing).ok
    assert all(res.drawing.bend_count(u, v) <= 1 for u, v in g.edges())
    assert res.drawing.bend_count("a", "b") == 1


def test_pipeline_t1_t2():
    g, q = fixture("t1.json")
    res = windrose_pipeline(g, q)
    assert res.planar and verify_drawing(g, q, res.drawing).ok
    g, q = fixture("t2-cyclic.json")
    res = windrose_pipeline(g, q)
    assert not res.planar and res.certificate["reason"] == "infeasible assignment"
    assert res.certificate["cycle"]["axis"] == "vertical"


def test_pipeline_delaunay_200_grid_bound():
    inst = delaunay(200, 4)
    res = windrose_pipeline(inst.graph, inst.constraints)
    assert res.planar
    n_star = res.augmented_size
    assert 0 <= res.drawing.min_coordinate() and res.drawing.max_coordinate() <= n_star - 1
    assert verify_drawing(inst.graph, inst.constraints, res.drawing).ok


def test_rotation_order_certificate():
    rot = {"c": ["a", "b", "d"], "a": ["c"], "b": ["c"], "d": ["c"]}
    g = build_plane_graph(list(rot), rot, ("c", "a"))
    q = QConstraints.from_edges({("c", "a"): "NE", ("c", "b"): "NW", ("c", "d"): "SE"})
    res = windrose_pipeline(g, q)
    assert not res.planar and res.certificate["reason"] == "rotation order"


def test_three_tree_single_edge():
    g = build_plane_graph(["u", "v"], {"u": ["v"], "v": ["u"]}, ("u", "v"))
    q = QConstraints.from_edges({("u", "v"): "NE"})
    d = three_tree_block_drawing(g, q)
    assert d.points == {"u": (0, 0), "v": (1, 1)}


def test_three_tree_k4():
    g, q = fixture("k4-fixture.json")
    d = three_tree_block_drawing(g, q)
    assert not d.bends and verify_drawing(g, q, d).ok
    assert all(isinstance(c, (int, Fraction)) for p in d.points.values() for c in p)


def test_three_tree_star():
    pts = {"c": (0, 0), "ne": (2, 3), "nw": (-3, 2), "sw": (-2, -3), "se": (3, -2)}
    edges = [("c", v) for v in pts if v != "c"]
    g = plane_graph_from_drawing(pts, edges)
    q = QConstraints.from_points(pts, edges)
    d = three_tree_block_drawing(g, q)
    c = d.points["c"]
    for v in ("ne", "nw", "sw", "se"):
        dx, dy = d.points[v][0] - c[0], d.points[v][1] - c[1]
        sx, sy = q[("c", v)].signs
        assert (dx, dy) == (sx, sy)


@pytest.mark.parametrize("seed", range(4))
def test_three_tree_two_radii(seed):
    inst = apollonian(20, seed)
    for radius in (Fraction(1), Fraction(1, 8)):
        d = three_tree_block_drawing(inst.graph, inst.constraints, radius=radius)
        assert verify_drawing(inst.graph, inst.constraints, d).ok


def test_three_tree_rejects_non_3tree_block():
    g = cycle4_graph()
    q = QConstraints.from_edges({("a", "b"): "NE", ("b", "c"): "SE", ("c", "d"): "SW", ("d", "a"): "NW"})
    with pytest.raises(BlockStructureUnsupported):
        three_tree_block_drawing(g, q)
    with pytest.raises(StyleUnavailable):
        straight_line_drawing(g, q)


def test_straight_line_for_quasi_input():
    g, q = square_with_centre()
    d = straight_line_drawing(g, q)
    assert not d.bends and verify_drawing(g, q, d).ok
