"""Instance generators."""
import pytest

from windrose.draw import windrose_pipeline
from windrose.generators import BadParams, apollonian, cyclic_triangle, delaunay, generate, nested_triangles
from windrose.graph import Quadrant, check_q_consistency
from windrose.io import dumps, instance_to_document
from windrose.verify import verify_drawing


def test_nested_triangles_two():
    inst = nested_triangles(2)
    g, q = inst.graph, inst.constraints
    assert len(g) == 6 and g.num_edges == 9
    triangle_edges = [e for e in g.edges() if e[0][:2] == e[1][:2]]
    assert len(triangle_edges) == 6
    # consecutive triangles alternate between the two diagonal directions
    for layer, allowed in (("t0", {Quadrant.NE, Quadrant.SW}), ("t1", {Quadrant.NW, Quadrant.SE})):
        dirs = {q[e] for e in triangle_edges if e[0].startswith(layer)}
        assert dirs <= allowed


@pytest.mark.parametrize("k", range(1, 6))
def test_nested_triangles_are_planar(k):
    inst = nested_triangles(k)
    res = windrose_pipeline(inst.graph, inst.constraints)
    assert res.planar and verify_drawing(inst.graph, inst.constraints, res.drawing).ok


def test_cyclic_triangle_is_t2():
    inst = cyclic_triangle()
    q = inst.constraints
    assert q[("u", "v")] == q[("v", "w")] == q[("w", "u")] == Quadrant.NE


def test_delaunay_seed_determinism():
    a = dumps(instance_to_document(*_gq(delaunay(100, 7))))
    b = dumps(instance_to_document(*_gq(delaunay(100, 7))))
    c = dumps(instance_to_document(*_gq(delaunay(100, 8))))
    assert a == b and a != c


def _gq(inst):
    return inst.graph, inst.constraints


def test_delaunay_distinct_coordinates_and_yes():
    inst = delaunay(100, 7)
    xs = [p[0] for p in inst.points.values()]
    ys = [p[1] for p in inst.points.values()]
    assert len(set(xs)) == len(set(ys)) == 100
    assert check_q_consistency(inst.graph, inst.constraints) == []
    assert windrose_pipeline(inst.graph, inst.constraints).planar


def test_apollonian_is_maximal_planar():
    inst = apollonian(30, 2)
    g = inst.graph
    assert len(g) == 30 and g.num_edges == 3 * 30 - 6


@pytest.mark.parametrize("kind, param", [("delaunay", None), ("nested-triangles", 0), ("bogus", 3), ("delaunay", 2)])
def test_bad_params(kind, param):
    with pytest.raises(BadParams):
        generate(kind, param)
