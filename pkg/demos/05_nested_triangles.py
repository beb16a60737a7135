"""
Nested triangles
================

Triangles nested inside each other, with sides alternating between the two
diagonal directions. The generator builds a straight-line drawing whose
coordinates blow up with the nesting depth; the one-bend pipeline keeps the
grid linear in the number of vertices.
"""
from windrose.draw import windrose_pipeline
from windrose.generators import nested_triangles

print(f"{'k':>2} {'n':>3} {'straight extent':>16} {'one-bend extent':>16} {'bends':>6}")
for k in range(1, 7):
    inst = nested_triangles(k)
    xs = [p[0] for p in inst.points.values()]
    ys = [p[1] for p in inst.points.values()]
    straight = max(max(xs) - min(xs), max(ys) - min(ys))
    res = windrose_pipeline(inst.graph, inst.constraints)
    bends = sum(res.drawing.bend_count(u, v) for u, v in inst.graph.edges())
    print(f"{k:>2} {len(inst.graph):>3} {straight:>16} {res.drawing.max_coordinate():>16} {bends:>6}")
