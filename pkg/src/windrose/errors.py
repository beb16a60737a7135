"""Exception hierarchy shared by all windrose modules."""


class WindroseError(Exception):
    """Base class for every error raised by this package."""


class GraphError(WindroseError, ValueError):
    """The input does not describe a valid connected simple plane graph."""


class NotConnected(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ParallelEdge(GraphError):
    pass


class InconsistentRotation(GraphError):
    pass


class BadWitness(GraphError):
    pass


class MissingDartLabel(GraphError):
    pass


class InconsistentConstraints(GraphError):
    """Twin darts carry quadrant labels that are not opposite."""


class LabelingError(WindroseError):
    pass


class NotTriangulated(LabelingError):
    pass


class InternalAmbiguousVertex(LabelingError):
    """An internal vertex of a triangulation has all neighbours in one quadrant.

    Attributes:
        vertex: the offending vertex.
    """

    def __init__(self, vertex):
        super().__init__(f"internal vertex {vertex!r} has all neighbours in one quadrant")
        self.vertex = vertex


class DemandError(LabelingError):
    """A face cannot receive a valid number of large angles."""

    def __init__(self, face, value, message):
        super().__init__(message)
        self.face = face
        self.value = value


class NegativeDemand(DemandError):
    pass


class FractionalDemand(DemandError):
    pass


class InconsistentPropagation(LabelingError):
    pass


class AugmentError(WindroseError):
    pass


class ParallelEdgeWouldBeCreated(AugmentError):
    pass


class StuckAtInternalVertex(AugmentError):
    pass


class NotAngular(AugmentError):
    pass


class DrawError(WindroseError):
    pass


class CyclicView(DrawError):
    pass


class BlockStructureUnsupported(DrawError):
    pass


class NotWindrosePlanar(DrawError):
    def __init__(self, certificate):
        super().__init__(f"instance is not windrose-planar: {certificate}")
        self.certificate = certificate


class StyleUnavailable(DrawError):
    pass


class MissingGeometry(WindroseError):
    pass


class CapExceeded(WindroseError):
    pass


class NotPlanar(GraphError):
    """The rotation system does not describe a plane embedding (Euler fails)."""
