"""Angle categories, angular labelings and the large-angle assignment."""
import pytest
from hypothesis import given, settings, strategies as st

from windrose.errors import FractionalDemand, InconsistentPropagation, InternalAmbiguousVertex, NegativeDemand
from windrose.graph import QConstraints, Quadrant
from windrose.labeling import (
    AMBIGUOUS,
    AngleLabeling,
    angle_category_between,
    check_angular,
    constraints_from_labeling,
    face_demands,
    face_target,
    find_large_angle_assignment,
    labeling_from_triangulated,
    solve_large_angle_assignment,
)
from windrose.verify import brute_force_assignment_oracle

from _support import all_assignments, cycle4_graph, drawn_subgraph, fixture, k4_graph, triangle_graph


def inner_face(g):
    return next(f for f in range(len(g.faces)) if f != g.outer_face)


def test_category_one_step():
    g, q = fixture("t1.json")
    # at v: (v,w) is SE, its clockwise successor (v,u) is SW
    assert g.cw_next("v", "w") == "u"
    assert angle_category_between(q, g.angle(("v", "w"))) == 90


def test_category_ambiguous():
    g, q = fixture("t1.json")
    assert angle_category_between(q, g.angle(("u", "v"))) == AMBIGUOUS


def test_category_two_steps_k4():
    g, q = fixture("k4-fixture.json")
    assert q[("v", "a")] == Quadrant.NW and q[("v", "b")] == Quadrant.SE
    assert g.cw_next("v", "a") == "b"
    assert angle_category_between(q, g.angle(("v", "a"))) == 180


def test_category_degree_one():
    g, q = fixture("p2.json")
    assert angle_category_between(q, g.angle(("u", "v"))) == 360


def t1_labeling(g):
    # u: inner 0, outer 360; v and w: inner 90, outer 270
    a = AngleLabeling()
    for v in g.vertices:
        for x in g.rotation(v):
            inner = g.angle((v, x)).face != g.outer_face
            a[(v, x)] = (0 if inner else 360) if v == "u" else (90 if inner else 270)
    return a


def test_t1_labeling_is_angular():
    g, _ = fixture("t1.json")
    a = t1_labeling(g)
    inner = inner_face(g)
    assert sum(a[k] for k in g.face_angles(inner)) == 180
    assert sum(a[k] for k in g.face_angles(g.outer_face)) == 900
    assert check_angular(g, a) == []


def test_all_zero_triangle_reports_cycle_violation():
    g = triangle_graph()
    a = AngleLabeling({(v, x): 0 for v in g.vertices for x in g.rotation(v)})
    inner = inner_face(g)
    assert ("face", inner, 0, 180) in check_angular(g, a)


def test_quadrilateral_all_right_angles():
    g = cycle4_graph()
    a = AngleLabeling({(v, x): (90 if g.angle((v, x)).face != g.outer_face else 270) for v in g.vertices for x in g.rotation(v)})
    assert check_angular(g, a) == []


def test_triangulated_labeling_t1():
    g, q = fixture("t1.json")
    a = labeling_from_triangulated(g, q)
    by_face = {g.angle(("u", x)).face: a[("u", x)] for x in g.rotation("u")}
    assert by_face[g.outer_face] == 360 and by_face[inner_face(g)] == 0


def test_triangulated_labeling_t2_fails_check():
    g, q = fixture("t2-cyclic.json")
    a = labeling_from_triangulated(g, q)
    assert check_angular(g, a)


def test_internal_ambiguous_vertex():
    g = k4_graph()
    q = QConstraints.from_edges({("v", "a"): "NE", ("v", "b"): "NE", ("v", "c"): "NE", ("a", "b"): "SE", ("b", "c"): "SW", ("c", "a"): "NW"})
    with pytest.raises(InternalAmbiguousVertex) as info:
        labeling_from_triangulated(g, q)
    assert info.value.vertex == "v"


def test_demands_p2():
    g, q = fixture("p2.json")
    # determined angles: 360 at u and w, ambiguous angles at v count 0
    assert len(g.faces) == 1 and len(g.faces[0]) == 4
    assert face_demands(g, q) == {0: (4 * 180 + 360 - 720) // 360} == {0: 1}


def test_demands_t1_inner():
    g, q = fixture("t1.json")
    assert face_demands(g, q)[inner_face(g)] == 0


def test_fractional_demand_on_right_angled_triangle():
    # three right inner angles need labels that break twin consistency
    import itertools

    g = triangle_graph()
    inner = inner_face(g)
    darts = list(g.darts())
    for labels in itertools.product(list(Quadrant), repeat=len(darts)):
        q = QConstraints(dict(zip(darts, labels)))
        cats = [angle_category_between(q, g.angle(k)) for k in g.face_angles(inner)]
        if cats == [90, 90, 90]:
            break
    with pytest.raises(FractionalDemand) as info:
        face_demands(g, q)
    assert info.value.value % 360 != 0
    assert face_target(g, inner) - 270 == -90


def test_consistent_constraints_never_give_fractional_demand():
    for g in (triangle_graph(), cycle4_graph(), k4_graph()):
        for q in all_assignments(g):
            try:
                face_demands(g, q)
            except NegativeDemand:
                pass


def test_t2_negative_demand():
    g, q = fixture("t2-cyclic.json")
    with pytest.raises(NegativeDemand):
        face_demands(g, q)


@pytest.mark.parametrize("name, count", [("p2.json", 2), ("t1.json", 1), ("t2-cyclic.json", 0)])
def test_flow_against_oracle(name, count):
    g, q = fixture(name)
    oracle = brute_force_assignment_oracle(g, q)
    assert len(oracle) == count
    a = find_large_angle_assignment(g, q)
    assert (a is not None) == (count > 0)
    if a is not None:
        assert a in oracle


def test_p2_one_large_angle_at_v():
    g, q = fixture("p2.json")
    a = find_large_angle_assignment(g, q)
    assert sorted(a.at(g, "v")) == [0, 360]


def test_t1_large_angle_outside():
    g, q = fixture("t1.json")
    res = solve_large_angle_assignment(g, q)
    assert res.choice and g.angle(res.choice["u"]).face == g.outer_face


def test_t2_certificate():
    g, q = fixture("t2-cyclic.json")
    res = solve_large_angle_assignment(g, q)
    assert res.labeling is None and res.certificate["kind"] == "negative demand"


def test_propagation_recovers_t1():
    g, q = fixture("t1.json")
    a = find_large_angle_assignment(g, q)
    assert dict(constraints_from_labeling(g, a, ("u", "v"), "NE")) == dict(q)


def test_propagation_shifted_anchor():
    g, q = fixture("t1.json")
    a = find_large_angle_assignment(g, q)
    shifted = constraints_from_labeling(g, a, ("u", "v"), "NW")
    assert all(shifted[d] == q[d].rotate(-1) for d in g.darts())


def test_propagation_rejects_all_zero():
    g = triangle_graph()
    a = {(v, x): 0 for v in g.vertices for x in g.rotation(v)}
    with pytest.raises(InconsistentPropagation):
        constraints_from_labeling(g, a, ("u", "v"), "NE")


@settings(max_examples=30, deadline=None)
@given(st.integers(5, 30), st.integers(0, 10**6))
def test_drawn_instances_have_angular_labelings(n, seed):
    g, q, _ = drawn_subgraph(n, seed)
    a = find_large_angle_assignment(g, q)
    assert a is not None and check_angular(g, a) == []
    # sum identities: vertices and faces both total 360 V
    assert sum(a.values()) == 360 * len(g)
    face_total = sum(a[k] for f in range(len(g.faces)) for k in g.face_angles(f))
    assert face_total == 360 * len(g)
    anchor = g.edges()[0]
    assert dict(constraints_from_labeling(g, a, anchor, q[anchor])) == dict(q)
