"""Instance and drawing documents."""
import json

import pytest
from hypothesis import given, settings, strategies as st

from windrose.draw import windrose_pipeline
from windrose.errors import GraphError
from windrose.generators import delaunay, k4_apex
from windrose.io import (
    DocumentError,
    document_to_drawing,
    drawing_to_document,
    drawing_to_svg,
    instance_to_document,
    parse_instance,
)
from windrose.treeblocks import three_tree_block_drawing

from _support import FIXTURES


@pytest.mark.parametrize("name", ["t1.json", "t2-cyclic.json", "k4-fixture.json", "p2.json"])
def test_fixture_round_trip(name):
    text = (FIXTURES / name).read_text()
    g, q = parse_instance(text)
    assert instance_to_document(g, q) == json.loads(text)


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 60), st.integers(0, 10**6))
def test_generated_round_trip(n, seed):
    inst = delaunay(n, seed)
    doc = instance_to_document(inst.graph, inst.constraints)
    g, q = parse_instance(json.dumps(doc))
    assert instance_to_document(g, q) == doc


def base_doc():
    return json.loads((FIXTURES / "t1.json").read_text())


@pytest.mark.parametrize(
    "mutate, needle",
    [
        (lambda d: d.pop("rotations"), "rotations"),
        (lambda d: d["quadrants"].pop("u->v"), "u->v"),
        (lambda d: d["quadrants"].__setitem__("u->v", "UP"), "u->v"),
        (lambda d: d["quadrants"].__setitem__("u-v", "NE"), "u-v"),
        (lambda d: d.__setitem__("outer_face", ["u", "v", "w", "u"]), "outer_face"),
        (lambda d: d.__setitem__("vertices", "uvw"), "vertices"),
    ],
)
def test_field_diagnostics(mutate, needle):
    doc = base_doc()
    mutate(doc)
    with pytest.raises(DocumentError, match=needle):
        parse_instance(json.dumps(doc))


def test_line_diagnostic():
    with pytest.raises(DocumentError, match="line 3"):
        parse_instance('{\n  "vertices": [],\n  oops\n}')


def test_malformed_rotation_is_graph_error():
    doc = base_doc()
    doc["rotations"]["u"] = ["v"]
    with pytest.raises(GraphError):
        parse_instance(json.dumps(doc))


def test_drawing_round_trip_integer():
    inst = delaunay(20, 1)
    d = windrose_pipeline(inst.graph, inst.constraints).drawing
    doc = drawing_to_document(inst.graph, d)
    back = document_to_drawing(json.loads(json.dumps(doc)))
    assert back.points == d.points
    assert all(back.polyline(u, v) == d.polyline(u, v) for u, v in inst.graph.edges())


def test_drawing_round_trip_rational():
    inst = k4_apex()
    d = three_tree_block_drawing(inst.graph, inst.constraints)
    doc = drawing_to_document(inst.graph, d)
    assert doc["coordinate_kind"] == "rational"
    assert {"num": 1, "den": 4} in doc["vertices"]["v"]
    assert document_to_drawing(json.loads(json.dumps(doc))).points == d.points


def test_svg_has_arrow_per_dart():
    inst = k4_apex()
    d = windrose_pipeline(inst.graph, inst.constraints).drawing
    svg = drawing_to_svg(inst.graph, inst.constraints, d)
    assert svg.startswith("<svg") and svg.count("marker-end=") == 2 * inst.graph.num_edges
    assert svg.count("<circle") == len(inst.graph)


def test_documents_match_published_schemas():
    import jsonschema

    docs = FIXTURES.parent.parent / "docs"
    inst_schema = json.loads((docs / "instance.schema.json").read_text())
    draw_schema = json.loads((docs / "drawing.schema.json").read_text())
    inst = k4_apex()
    jsonschema.validate(instance_to_document(inst.graph, inst.constraints), inst_schema)
    for d in (windrose_pipeline(inst.graph, inst.constraints).drawing, three_tree_block_drawing(inst.graph, inst.constraints)):
        jsonschema.validate(json.loads(json.dumps(drawing_to_document(inst.graph, d))), draw_schema)
