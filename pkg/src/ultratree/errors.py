"""Exception hierarchy.

Every error carries a ``witness`` tuple naming the offending points, vertices
or edge so callers (and the CLI) can report it without parsing messages.
"""

from __future__ import annotations


class UltraTreeError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = tuple(witness)

    @property
    def kind(self) -> str:
        return type(self).__name__


class InvalidInput(UltraTreeError):
    """The input does not describe a valid object (exit code 2 in the CLI)."""


# -- metric spaces -----------------------------------------------------------

class SpaceError(InvalidInput):
    pass


class ShapeMismatch(SpaceError):
    pass


class DuplicateName(SpaceError):
    pass


class NegativeDistance(SpaceError):
    pass


class NonzeroDiagonal(SpaceError):
    pass


class Asymmetric(SpaceError):
    pass


class ZeroOffDiagonal(SpaceError):
    pass


class StrongTriangleViolation(SpaceError):
    pass


class EmptySubset(SpaceError):
    pass


class UnknownPoint(SpaceError):
    pass


class EmptySpace(SpaceError):
    pass


class TooSmall(SpaceError):
    pass


class NotABall(SpaceError):
    pass


# -- trees -------------------------------------------------------------------

class TreeError(InvalidInput):
    pass


class SelfLoop(TreeError):
    pass


class DuplicateEdge(TreeError):
    pass


class NegativeLabel(TreeError):
    pass


class HasCycle(TreeError):
    pass


class Disconnected(TreeError):
    pass


class UnknownVertex(TreeError):
    pass


class NotAnUltrametricGenerator(TreeError):
    pass


class InvalidShape(TreeError):
    pass


# -- verdicts and limits -----------------------------------------------------

class NotUGVL(UltraTreeError):
    """The space is not generated by any labeled tree.

    ``ball`` holds the names of an open ball that is not a centered sphere.
    """

    def __init__(self, message: str, ball: tuple = ()):
        super().__init__(message, ball)
        self.ball = tuple(ball)


class InternalCriterionMismatch(UltraTreeError):
    """Two equivalent characterizations disagreed: an implementation bug."""


class InputTooLarge(UltraTreeError):
    pass


class PoolTooSmall(UltraTreeError):
    pass
