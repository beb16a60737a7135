"""Windrose planarity testing and drawing for quadrant-constrained plane graphs."""
from .draw import PipelineResult, quasi_triangulated_drawing, straight_line_drawing, windrose_pipeline
from .drawing import Drawing
from .graph import PlaneGraph, QConstraints, Quadrant, build_plane_graph, plane_graph_from_drawing
from .labeling import AngleLabeling, check_angular, find_large_angle_assignment
from .treeblocks import three_tree_block_drawing
from .verify import VerificationReport, brute_force_assignment_oracle, verify_drawing

__all__ = [
    "AngleLabeling",
    "Drawing",
    "PipelineResult",
    "PlaneGraph",
    "QConstraints",
    "Quadrant",
    "VerificationReport",
    "brute_force_assignment_oracle",
    "build_plane_graph",
    "check_angular",
    "find_large_angle_assignment",
    "plane_graph_from_drawing",
    "quasi_triangulated_drawing",
    "straight_line_drawing",
    "three_tree_block_drawing",
    "verify_drawing",
    "windrose_pipeline",
]
