"""Exception hierarchy shared by every domrec module."""


class DomrecError(Exception):
    pass


class GraphError(DomrecError, ValueError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateLabel(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class UnsupportedSize(GraphError):
    pass


class GraphFormatError(GraphError):
    """Base class for anything that fails to decode."""


class MalformedHeader(GraphFormatError):
    pass


class TruncatedBody(GraphFormatError):
    pass


class NonCanonicalPadding(GraphFormatError):
    pass


class VertexNotInSet(DomrecError, ValueError):
    pass


class CardinalityMismatch(DomrecError, ValueError):
    pass


class ParameterUndefinedOrInfinite(DomrecError):
    pass


class EmptyHost(DomrecError, ValueError):
    pass


class UnsupportedKind(DomrecError, ValueError):
    pass


class NoConstructionForVariant(DomrecError, ValueError):
    pass


class ParameterMismatch(DomrecError):
    """Computed optimum disagrees with the construction's closed form."""


class InstanceTooLarge(UserWarning):
    """Advisory only: emitted as a warning, the computation still runs."""
