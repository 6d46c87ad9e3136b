"""Exception hierarchy shared by every module of the package."""


class GraphError(Exception):
    """Base class for all errors raised by edgebalance."""


class InvalidGraph(GraphError):
    """The edge list does not describe a simple undirected graph."""


class SelfLoop(InvalidGraph):
    pass


class DuplicateEdge(InvalidGraph):
    pass


class VertexOutOfRange(InvalidGraph):
    pass


class InvalidParameter(GraphError):
    """A generator or construction received an unusable parameter."""


class DisconnectedGraph(GraphError):
    """An analysis operation was asked to work on a disconnected graph."""


class DisconnectedFactor(DisconnectedGraph):
    pass


class DisconnectedBaseGraph(DisconnectedGraph):
    pass


class EmptyEdgeSet(GraphError):
    pass


class DiameterTooSmall(GraphError):
    pass


class EdgeNotFound(GraphError):
    pass


class ParseError(GraphError):
    """Malformed graph text."""


class InvalidClaimParams(GraphError):
    pass


class UnknownClaim(GraphError):
    pass


class CapExceeded(GraphError):
    pass
