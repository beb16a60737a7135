"""
Straight lines for planar 3-trees
=================================

Apollonian networks are built by repeatedly dropping a vertex into a
triangle. For them the library can avoid bends entirely, at the price of
rational coordinates.
"""
from fractions import Fraction
from pathlib import Path

from windrose.draw import windrose_pipeline
from windrose.generators import apollonian
from windrose.io import drawing_to_svg
from windrose.treeblocks import three_tree_block_drawing
from windrose.verify import verify_drawing

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

inst = apollonian(15, seed=2)
g, q = inst.graph, inst.constraints

# %%
# The one-bend pipeline works on any yes-instance.
bent = windrose_pipeline(g, q).drawing
print("one-bend drawing:", sum(bent.bend_count(u, v) for u, v in g.edges()), "bends")

# %%
# The straight-line construction peels the graph down to a triangle and puts
# vertices back one at a time, each inside the region its quadrants allow.
straight = three_tree_block_drawing(g, q)
print("straight-line drawing verified:", verify_drawing(g, q, straight).ok)
dens = {Fraction(c).denominator for p in straight.points.values() for c in p}
print("largest denominator:", max(dens))

# %%
# A smaller start radius moves vertices nearer to their anchors but keeps the
# drawing valid.
small = three_tree_block_drawing(g, q, radius=Fraction(1, 16))
print("radius 1/16 verified:", verify_drawing(g, q, small).ok)

(OUT / "apollonian-bent.svg").write_text(drawing_to_svg(g, q, bent))
print("wrote", OUT / "apollonian-bent.svg")
