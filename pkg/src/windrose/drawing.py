"""The :class:`Drawing` value type shared by the drawing and verification code."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from .graph import Dart, Vertex

Point = Tuple[object, object]


@dataclass
class Drawing:
    """Vertex positions plus bend points per edge.

    Attributes:
        points: vertex -> (x, y); ints or Fractions.
        bends: edge (u, v) -> bend points listed from u to v.  Missing edges
            are straight.
        coordinate_kind: ``"integer"`` or ``"rational"``.
    """

    points: Dict[Vertex, Point]
    bends: Dict[Dart, List[Point]] = field(default_factory=dict)
    coordinate_kind: str = "integer"

    def polyline(self, u: Vertex, v: Vertex) -> List[Point]:
        if (u, v) in self.bends:
            mid = list(self.bends[(u, v)])
        elif (v, u) in self.bends:
            mid = list(reversed(self.bends[(v, u)]))
        else:
            mid = []
        return [self.points[u], *mid, self.points[v]]

    def bend_count(self, u: Vertex, v: Vertex) -> int:
        return len(self.polyline(u, v)) - 2

    def max_coordinate(self):
        coords = [c for p in self.points.values() for c in p]
        coords += [c for pts in self.bends.values() for p in pts for c in p]
        return max(coords)

    def min_coordinate(self):
        coords = [c for p in self.points.values() for c in p]
        coords += [c for pts in self.bends.values() for p in pts for c in p]
        return min(coords)


def rational_kind(points) -> str:
    for p in points:
        for c in p:
            if isinstance(c, Fraction) and c.denominator != 1:
                return "rational"
    return "integer"
