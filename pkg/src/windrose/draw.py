"""Grid drawings of quasi-triangulated instances and the end-to-end pipeline."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

from .augment import (
    Elimination,
    Quasi,
    SubdivisionMap,
    Triangulation,
    add_poles,
    eliminate_180_angles,
    triangulate_preserving_labeling,
)
from .drawing import Drawing
from .errors import BlockStructureUnsupported, CyclicView, DrawError, InconsistentConstraints, NotWindrosePlanar, StyleUnavailable
from .graph import PlaneGraph, QConstraints, Quadrant, check_q_consistency, directed_view, find_directed_cycle, topological_order
from .labeling import AngleLabeling, constraints_from_labeling, solve_large_angle_assignment
from .treeblocks import three_tree_block_drawing
from .verify import VerificationReport, verify_drawing


def quasi_triangulated_drawing(g: PlaneGraph, q: QConstraints) -> Drawing:
    """Straight-line drawing from topological ranks of the two directed views.

    Raises:
        CyclicView: one of the views has a directed cycle.
    """
    ranks = {}
    for axis in ("horizontal", "vertical"):
        order = topological_order(g, directed_view(g, q, axis))
        if order is None:
            raise CyclicView(f"the {axis} view has a directed cycle")
        ranks[axis] = {v: i for i, v in enumerate(order)}
    points = {v: (ranks["horizontal"][v], ranks["vertical"][v]) for v in g.vertices}
    return Drawing(points, {}, "integer")


def collapse_to_one_bend(g: PlaneGraph, d_star: Drawing, sub: SubdivisionMap) -> Drawing:
    """Drawing of ``g`` read off a drawing of its augmentation.

    Every subdivided edge bends once, at its subdivision vertex.
    """
    points = {v: d_star.points[v] for v in g.vertices}
    bends = {}
    for u, w in g.edges():
        path = sub.path(u, w)
        if len(path) > 2:
            bends[(u, w)] = [d_star.points[z] for z in path[1:-1]]
    return Drawing(points, bends, d_star.coordinate_kind)


@dataclass
class PipelineResult:
    """Outcome of :func:`windrose_pipeline`.

    Attributes:
        planar: True for a windrose-planar instance.
        drawing: the 1-bend drawing of the input (None for a no-instance).
        certificate: reason for rejection (empty for a yes-instance).
        labeling: the angular labeling used.
        stages: intermediate graphs, kept for inspection.
    """

    planar: bool
    drawing: Optional[Drawing] = None
    certificate: Dict = field(default_factory=dict)
    labeling: Optional[AngleLabeling] = None
    stages: Dict[str, object] = field(default_factory=dict)
    report: Optional[VerificationReport] = None

    @property
    def augmented_size(self) -> int:
        quasi = self.stages.get("poles")
        return len(quasi.graph) if quasi is not None else 0


def windrose_pipeline(g: PlaneGraph, q: QConstraints, on_step=None) -> PipelineResult:
    """Decide windrose planarity and build a verified 1-bend grid drawing.

    Raises:
        InconsistentConstraints: twin darts with non-opposite quadrants.
        MissingDartLabel: some dart has no quadrant.
    """
    violations = check_q_consistency(g, q)
    twins = [d for kind, d in violations if kind == "twin"]
    if twins:
        raise InconsistentConstraints(f"twin darts disagree on edge {twins[0]!r}")
    if violations:
        v = violations[0][1]
        return PipelineResult(False, certificate={"reason": "rotation order", "vertex": str(v)})
    res = solve_large_angle_assignment(g, q)
    if not res.feasible:
        cert = {"reason": "infeasible assignment", "detail": res.certificate}
        for axis in ("vertical", "horizontal"):
            cycle = find_directed_cycle(g, directed_view(g, q, axis))
            if cycle:
                cert["cycle"] = {"axis": axis, "vertices": [str(x) for x in cycle]}
                break
        return PipelineResult(False, certificate=cert)
    tri: Triangulation = triangulate_preserving_labeling(g, res.labeling, on_step=on_step)
    anchor = next(iter(g.darts()))
    q_tri = constraints_from_labeling(tri.graph, tri.labeling, anchor, q[anchor])
    if any(q_tri[d] != q[d] for d in g.darts()):
        raise DrawError("refined constraints disagree with the input")
    elim: Elimination = eliminate_180_angles(tri.graph, q_tri, on_step=on_step)
    quasi: Quasi = add_poles(elim.graph, elim.constraints, on_step=on_step)
    d_star = quasi_triangulated_drawing(quasi.graph, quasi.constraints)
    drawing = collapse_to_one_bend(g, d_star, elim.subdivision)
    report = verify_drawing(g, q, drawing)
    if not report.ok:
        raise DrawError(f"self-verification failed: {report.violations[:3]}")
    stages = {"triangulation": tri, "elimination": elim, "poles": quasi, "drawing_star": d_star}
    return PipelineResult(True, drawing, {}, res.labeling, stages, report)


_POLE_RING = (Quadrant.NE, Quadrant.SE, Quadrant.SW, Quadrant.NW)


def is_quasi_triangulated(g: PlaneGraph, q: QConstraints) -> bool:
    """Outer 4-cycle in the pole quadrant ring and triangular internal faces."""
    walk = g.faces[g.outer_face]
    if len(walk) != 4 or len({d[0] for d in walk}) != 4:
        return False
    if any(len(f) != 3 for i, f in enumerate(g.faces) if i != g.outer_face):
        return False
    labels = tuple(q[d] for d in walk)
    return any(labels == _POLE_RING[i:] + _POLE_RING[:i] for i in range(4))


def straight_line_drawing(g: PlaneGraph, q: QConstraints) -> Drawing:
    """Zero-bend drawing for quasi-triangulated or 3-tree-block inputs.

    Raises:
        NotWindrosePlanar: the instance has no windrose-planar drawing.
        StyleUnavailable: the input is in neither supported class.
    """
    if is_quasi_triangulated(g, q):
        try:
            d = quasi_triangulated_drawing(g, q)
        except CyclicView:
            d = None
        if d is not None and verify_drawing(g, q, d).ok:
            return d
    res = windrose_pipeline(g, q)
    if not res.planar:
        raise NotWindrosePlanar(res.certificate)
    try:
        return three_tree_block_drawing(g, q)
    except BlockStructureUnsupported as exc:
        raise StyleUnavailable(f"straight-line style needs a quasi-triangulated or 3-tree-block input: {exc}") from None
