"""Exception hierarchy shared by all orientkit modules."""


class OrientKitError(Exception):
    """Base class for all domain errors."""


class ParseError(OrientKitError):
    """Malformed edge-list input; carries the 1-based offending line."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HeaderFormatError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class NotBipartiteError(OrientKitError):
    """Raised with an odd cycle as a vertex sequence."""

    def __init__(self, odd_cycle):
        self.odd_cycle = list(odd_cycle)
        cycle = "-".join(str(v) for v in self.odd_cycle)
        super().__init__(f"not bipartite (odd cycle {cycle})")


class PlanarityNotAssertedError(OrientKitError):
    pass


class TooSmallError(OrientKitError):
    pass


class EmptyEdgeSetError(OrientKitError):
    pass


class PreconditionDegreeError(OrientKitError):
    """Some X-class vertex has degree <= k."""

    def __init__(self, vertex, degree, k):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree} <= k = {k}")


class PreconditionMadError(OrientKitError):
    """No k-orientation exists; carries the dense-subgraph witness."""

    def __init__(self, k, witness):
        self.k = k
        self.witness = list(witness)
        super().__init__(
            f"no {k}-orientation exists (dense subset of {len(self.witness)} vertices)"
        )


class MinDegreeTooSmallError(OrientKitError):
    pass


class EdgeBoundViolatedError(OrientKitError):
    pass


class SizeMismatchError(OrientKitError):
    pass


class IncompleteModelError(OrientKitError):
    pass


class ExceedsCapError(OrientKitError):
    pass


class PreconditionFailedError(OrientKitError):
    """A gate of the quadrangulation decision failed; names the gate."""

    def __init__(self, gate):
        self.gate = gate
        super().__init__(f"precondition failed: {gate}")


class BadParamsError(OrientKitError):
    pass
