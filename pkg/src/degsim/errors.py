"""Exception taxonomy.

Construction preconditions mirror the hypotheses of the lemmas they implement,
so a failure names the violated hypothesis instead of surfacing as a generic
ValueError.  The three intermediate classes exist because the CLI maps them to
distinct exit codes (parse -> 2, dimension -> 3, precondition -> 4).
"""


class DegsimError(Exception):
    """Base class for every library-specific error."""


class ParseError(DegsimError):
    """Malformed external input (graph6 text, JSON encodings)."""


class MalformedGraph6Error(ParseError):
    """Bad length or out-of-range bytes in a graph6 string."""


class DimensionMismatchError(DegsimError):
    """Matrix/vector dimensions are inconsistent."""


class SingularMatrixError(DegsimError):
    """A matrix required to be invertible has determinant zero."""


class InexactDivisionError(DegsimError):
    """An exact polynomial division left a remainder (internal misuse)."""


class PreconditionError(DegsimError):
    """A construction hypothesis does not hold for the given arguments."""


class OutOfRangeError(PreconditionError):
    """Vertex index outside 0..n-1."""


class NoSuchEdgeError(PreconditionError):
    """The named edge is absent."""


class BadVertexListError(PreconditionError):
    """Vertex list has duplicates or out-of-range entries."""


class UnknownDegreeClassError(PreconditionError):
    """A named degree does not occur in the graph."""


class NotSwitchableError(PreconditionError):
    """The partition fails the basic local-switching conditions."""


class NotDegreeSwitchableError(PreconditionError):
    """The partition fails the stronger degree-preserving switching conditions."""


class NotConnectedError(PreconditionError):
    """A graph required to be connected is not."""


class NotRegularError(PreconditionError):
    """A graph required to be regular is not."""


class BadCellIndexError(PreconditionError):
    """Cell index outside the partition's cells (the rest set counts as index k)."""


class DegreeNotUniqueError(PreconditionError):
    """A designated vertex must have a degree unique in its graph."""


class DegreeMismatchError(PreconditionError):
    """Designated vertices must have equal degrees across the two graphs."""


class AttachSetNotConnectedError(PreconditionError):
    """The induced subgraph on the designated vertices must be connected."""


class BadBlockStructureError(PreconditionError):
    """The certificate is not block-diagonal with respect to degree classes."""


class BadCertificateError(PreconditionError):
    """The supplied certificate does not verify the base pair."""


class ConditionViolatedError(PreconditionError):
    """A numbered lemma hypothesis fails; carries the condition index."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class IsolatedVertexError(PreconditionError):
    """The graph has an isolated vertex where minimum degree >= 1 is required."""


class TooSmallError(PreconditionError):
    """The graph has fewer vertices than the operation requires."""
