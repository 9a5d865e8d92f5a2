"""Exception hierarchy.

Everything a caller can provoke with bad input derives from :class:`InputError`
(which is also a :class:`ValueError`); the CLI maps those to exit code 2.
"""


class HyperterrainError(Exception):
    """Base class for all package errors."""


class InputError(HyperterrainError, ValueError):
    """Invalid graph, parameters or arguments supplied by the caller."""


class EmptyInput(InputError):
    pass


class MalformedInput(InputError):
    pass


class SelfLoop(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class DisconnectedGraph(InputError):
    pass


class InvalidParams(InputError):
    pass


class KOutOfRange(InputError):
    pass


class UnknownVertex(InputError):
    pass


class EmptySet(InputError):
    pass


class MissingDelta(InputError):
    pass


class NotAShortestPath(InputError):
    pass


class NotMutuallyDistant(InputError):
    pass


class InvalidTree(InputError):
    pass


class SizeLimitExceeded(InputError):
    pass


class IterationCapExceeded(HyperterrainError, RuntimeError):
    """A furthest-vertex sweep failed to reach a fixpoint within ``n`` steps.

    This cannot happen for a correct implementation; it signals a bug.
    """
