"""Command line behaviour, run in-process and as a subprocess."""
import json
import os
import subprocess
import sys


from windrose.cli import main
from windrose.generators import apollonian
from windrose.io import dumps, instance_to_document

from _support import FIXTURES


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_t1_yes(capsys):
    code, out, _ = run(["test", str(FIXTURES / "t1.json")], capsys)
    assert code == 0 and json.loads(out) == {"windrose_planar": True}


def test_t2_no(capsys):
    code, out, _ = run(["test", str(FIXTURES / "t2-cyclic.json")], capsys)
    verdict = json.loads(out)
    assert code == 1 and verdict["windrose_planar"] is False
    assert verdict["certificate"]["reason"] == "infeasible assignment"


def test_malformed_rotations_exit_2(tmp_path, capsys):
    doc = json.loads((FIXTURES / "t1.json").read_text())
    doc["rotations"]["u"] = ["v", "v"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(["test", str(path)], capsys)
    assert code == 2 and "error" in json.loads(err)


def test_unreadable_file_exit_2(tmp_path, capsys):
    code, _, _ = run(["test", str(tmp_path / "missing.json")], capsys)
    assert code == 2


def test_draw_t1_json_grid_bound(tmp_path, capsys):
    out = tmp_path / "d.json"
    code, _, _ = run(["draw", str(FIXTURES / "t1.json"), "--format", "json", "--out", str(out)], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    coords = [c for p in doc["vertices"].values() for c in p] + [c for e in doc["edges"] for b in e["bends"] for c in b]
    # the poles alone give n* >= n + 4
    assert all(isinstance(c, int) for c in coords)
    assert min(coords) >= 0 and max(coords) <= len(doc["vertices"]) + 4 + 2 * len(doc["edges"]) - 1


def test_draw_k4_straight_is_rational(capsys):
    code, out, _ = run(["draw", str(FIXTURES / "k4-fixture.json"), "--style", "straight"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["coordinate_kind"] == "rational"
    assert all(e["bends"] == [] for e in doc["edges"])


def test_draw_straight_unsupported_exit_3(tmp_path, capsys):
    rot = {"a": ["b", "d"], "b": ["c", "a"], "c": ["d", "b"], "d": ["a", "c"]}
    doc = {
        "vertices": ["a", "b", "c", "d"],
        "rotations": rot,
        "outer_face": ["a", "b", "c", "d"],
        "quadrants": {"a->b": "NE", "b->a": "SW", "b->c": "SE", "c->b": "NW", "c->d": "SW", "d->c": "NE", "d->a": "NW", "a->d": "SE"},
    }
    path = tmp_path / "c4.json"
    path.write_text(json.dumps(doc))
    assert run(["test", str(path)], capsys)[0] == 0
    assert run(["draw", str(path), "--style", "straight"], capsys)[0] == 3


def test_draw_no_instance_exit_1(capsys):
    assert run(["draw", str(FIXTURES / "t2-cyclic.json")], capsys)[0] == 1


def test_draw_svg(tmp_path, capsys):
    out = tmp_path / "k4.svg"
    assert run(["draw", str(FIXTURES / "k4-fixture.json"), "--format", "svg", "--out", str(out)], capsys)[0] == 0
    assert out.read_text().startswith("<svg")


def test_generate_fixed_fixture_matches_file(capsys):
    code, out, _ = run(["generate", "cyclic-triangle"], capsys)
    assert code == 0 and out == (FIXTURES / "t2-cyclic.json").read_text()


def test_generate_nested(capsys):
    code, out, _ = run(["generate", "nested-triangles", "2"], capsys)
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 6 and len(doc["quadrants"]) == 18


def test_generate_seed_env(monkeypatch, capsys):
    _, explicit, _ = run(["generate", "delaunay", "30", "--seed", "5"], capsys)
    monkeypatch.setenv("WINDROSE_SEED", "5")
    _, from_env, _ = run(["generate", "delaunay", "30"], capsys)
    monkeypatch.setenv("WINDROSE_SEED", "6")
    _, other, _ = run(["generate", "delaunay", "30"], capsys)
    assert explicit == from_env != other


def test_generate_bad_params(capsys):
    assert run(["generate", "delaunay"], capsys)[0] == 2
    assert run(["generate", "nonsense", "3"], capsys)[0] == 2


def test_delaunay_100_seed_7_end_to_end(tmp_path, capsys):
    inst = tmp_path / "d.json"
    drawing = tmp_path / "dd.json"
    assert run(["generate", "delaunay", "100", "--seed", "7", "--out", str(inst)], capsys)[0] == 0
    assert run(["test", str(inst)], capsys)[0] == 0
    assert run(["draw", str(inst), "--out", str(drawing)], capsys)[0] == 0
    code, out, _ = run(["verify", str(inst), str(drawing)], capsys)
    assert code == 0 and json.loads(out)["ok"]


def test_verify_reports_bad_drawing(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": {"u": [0, 0], "v": [2, 1], "w": [1, 2]}, "edges": []}))
    code, out, _ = run(["verify", str(FIXTURES / "t1.json"), str(bad)], capsys)
    assert code == 1 and not json.loads(out)["embedding_ok"]


def test_apollonian_straight(tmp_path, capsys):
    inst = apollonian(25, 3)
    path = tmp_path / "ap.json"
    path.write_text(dumps(instance_to_document(inst.graph, inst.constraints)))
    assert run(["draw", str(path), "--style", "straight"], capsys)[0] == 0


def test_module_entry_point(tmp_path):
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "windrose", "test", str(FIXTURES / "t2-cyclic.json")], capture_output=True, text=True, env=env)
    assert proc.returncode == 1 and json.loads(proc.stdout)["windrose_planar"] is False


def test_console_script_help():
    proc = subprocess.run(["windrose", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "generate" in proc.stdout
