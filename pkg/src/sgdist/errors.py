"""Exception types raised by sgdist."""


class SignedGraphError(Exception):
    """Base class for all sgdist errors."""


class ParseError(SignedGraphError):
    """Malformed edge-list document (bad header, token count, vertex range)."""


class BadSignError(ParseError):
    """Sign token not one of '+', '-', '+1', '-1'."""


class LoopEdgeError(SignedGraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(SignedGraphError):
    """The same unordered vertex pair appears more than once."""


class DisconnectedError(SignedGraphError):
    """The underlying graph is not connected."""


class VertexOutOfRangeError(SignedGraphError):
    """A vertex label lies outside 1..n."""


class BadFamilyParamError(SignedGraphError):
    """Invalid parameter for a graph-family generator."""


class PathExplosionError(SignedGraphError):
    """Shortest-path enumeration would exceed the caller's cap."""


class NotCompatibleError(SignedGraphError):
    """The two signed distance matrices differ; carries one witness pair."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        u, v = self.witness
        super().__init__(f"incompatible pair ({u}, {v})")


class NotSymmetricError(SignedGraphError):
    """Matrix handed to the symmetric eigensolver is not symmetric."""


class NoConvergenceError(SignedGraphError):
    """Eigensolver sweep cap exceeded."""


class TooLargeError(SignedGraphError):
    """Input too large for exact subgraph enumeration."""


class SingularThetaError(SignedGraphError):
    """Angle is a multiple of 2*pi, where the cosine sum formula degenerates."""
