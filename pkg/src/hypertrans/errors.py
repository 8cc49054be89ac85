"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HypergraphError(ValueError):
    """Base class for all errors raised by hypertrans."""


class EdgeWrongSize(HypergraphError):
    pass


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class Disconnected(HypergraphError):
    pass


class BadSubset(HypergraphError):
    pass


class Overlap(HypergraphError):
    pass


class BadParam(HypergraphError):
    pass


class NotCoEdge(HypergraphError):
    pass


class NotPendantEdge(HypergraphError):
    pass


class NotUnicyclic(HypergraphError):
    pass


class SourceNotInEdge(HypergraphError):
    pass


class TargetInEdge(HypergraphError):
    pass


class CollisionWithExistingEdge(HypergraphError):
    pass


class GirthTooSmall(HypergraphError):
    pass


class GirthNotTwo(HypergraphError):
    pass


class NothingToMove(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class BadLemmaId(HypergraphError):
    pass


class HgrParseError(HypergraphError):
    pass
