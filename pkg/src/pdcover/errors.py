"""Exception hierarchy shared by every pdcover module."""


class CoverError(ValueError):
    """Base class for invalid inputs to pdcover operations."""


# instance construction
class EmptyEdge(CoverError):
    pass


class UnknownVertex(CoverError):
    pass


class NonpositiveWeight(CoverError):
    pass


class DuplicateVertexInEdge(CoverError):
    pass


class UncoveredElement(CoverError):
    pass


class UnknownId(CoverError):
    pass


# engine
class EpsOutOfRange(CoverError):
    pass


class NonIntegerWeights(CoverError):
    pass


class NoLiveEdges(CoverError):
    pass


class RoundBoundExceeded(RuntimeError):
    """The engine ran past twice the proven round bound (a numeric-mode bug)."""


# certificates
class NegativePackingValue(CoverError):
    pass


class InvalidInputs(CoverError):
    pass


class NotEpsMaximal(CoverError):
    pass


class EpsTooLarge(CoverError):
    pass


# reference solvers
class TooLarge(CoverError):
    pass


# io / cli
class InstanceError(CoverError):
    """A problem in an instance file, tagged with its 1-based line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InstanceSyntaxError(InstanceError):
    pass


class InstanceSemanticError(InstanceError):
    pass


class InfeasibleParams(CoverError):
    pass


class BoundViolated(AssertionError):
    pass
