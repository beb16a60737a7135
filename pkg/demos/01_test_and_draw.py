"""
Deciding and drawing small instances
====================================

Three hand-sized instances: a triangle that can be drawn, a triangle whose
quadrants chase each other around a cycle, and K4 with one vertex inside.
"""
from pathlib import Path

from windrose.draw import windrose_pipeline
from windrose.generators import cyclic_triangle, k4_apex, triangle
from windrose.io import drawing_to_svg

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# %%
# The triangle u=(0,0), v=(1,2), w=(2,1). Its quadrants come from these
# points, so a drawing exists; the pipeline finds its own, on a small grid.
t1 = triangle()
res = windrose_pipeline(t1.graph, t1.constraints)
print("triangle:", res.planar, res.drawing.points)

# %%
# The cyclic triangle asks for v north-east of u, w north-east of v and u
# north-east of w. The y-coordinates would have to increase around a cycle,
# so the answer is no, and the certificate names the offending face and cycle.
t2 = cyclic_triangle()
res = windrose_pipeline(t2.graph, t2.constraints)
print("cyclic triangle:", res.planar, res.certificate)

# %%
# K4 with v inside triangle a, b, c. The angle at v between a and b spans
# two quadrants, so the pipeline subdivides the outer edge a-b and the final
# drawing bends that edge once.
k4 = k4_apex()
res = windrose_pipeline(k4.graph, k4.constraints)
for u, v in k4.graph.edges():
    print(f"  {u}-{v}:", res.drawing.polyline(u, v))
print("augmented graph has", res.augmented_size, "vertices; report ok:", res.report.ok)

(OUT / "k4.svg").write_text(drawing_to_svg(k4.graph, k4.constraints, res.drawing))
print("wrote", OUT / "k4.svg")
