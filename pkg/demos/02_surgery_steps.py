"""
Watching the augmentation
=========================

The pipeline grows the input into a graph that can be drawn straight on a
grid. Each growth step keeps the angle labeling valid; this script replays
the steps and checks this after each one.
"""
from collections import Counter

import networkx as nx

from windrose.draw import windrose_pipeline
from windrose.generators import delaunay
from windrose.graph import QConstraints, plane_graph_from_drawing
from windrose.labeling import check_angular, find_large_angle_assignment, refinement_violations

# %%
# Start from a sparse drawn graph: every other Delaunay edge, plus enough
# edges to stay connected.
inst = delaunay(25, seed=3)
edges = inst.graph.edges()
keep = edges[::2]
sub = nx.Graph(keep)
sub.add_nodes_from(inst.graph.vertices)
for u, v in nx.minimum_spanning_edges(nx.Graph(edges), data=False):
    if not sub.has_edge(u, v):
        keep.append((u, v))
        sub.add_edge(u, v)
g = plane_graph_from_drawing(inst.points, keep)
q = QConstraints.from_points(inst.points, keep)
print(f"input: {len(g)} vertices, {g.num_edges} edges, {len(g.faces)} faces")

# %%
# Replay. ``state`` holds the previous graph and labeling so each step can be
# compared with the one before it.
state = {"g": g, "a": find_large_angle_assignment(g, q)}
kinds = Counter()


def on_step(kind, g_new, a_new):
    kinds[kind] += 1
    assert not check_angular(g_new, a_new)
    assert not refinement_violations(state["g"], state["a"], g_new, a_new)
    state["g"], state["a"] = g_new, a_new


res = windrose_pipeline(g, q, on_step=on_step)
print("steps:", dict(kinds))

# %%
# The stages are kept on the result for inspection.
for name in ("triangulation", "elimination", "poles"):
    stage = res.stages[name]
    print(f"{name:>13}: {len(stage.graph)} vertices, {stage.graph.num_edges} edges")
bent = sum(res.drawing.bend_count(u, v) for u, v in g.edges())
print(f"final drawing: {bent} of {g.num_edges} edges bend once")
