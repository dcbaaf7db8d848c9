"""Exception hierarchy shared by all planarcanon modules."""

from __future__ import annotations


class PlanarCanonError(Exception):
    """Base class for all errors raised by planarcanon."""


class GraphFormatError(PlanarCanonError, ValueError):
    """Malformed graph input (bad file, self-loop, out-of-range vertex)."""


class NonPlanarError(PlanarCanonError):
    """The input graph admits no planar embedding."""


class DisconnectedError(PlanarCanonError):
    pass


class NotBiconnectedError(PlanarCanonError):
    pass


class TooSmallError(PlanarCanonError):
    pass


class MultipleCenterError(PlanarCanonError):
    """A tree expected to have a unique center has two."""


class EdgeNotInComponentError(PlanarCanonError, KeyError):
    pass


class NotThreeConnectedError(PlanarCanonError):
    pass


class UnbalancedListError(PlanarCanonError):
    """Bracket tokens of a canonical list do not balance."""


class TooLargeError(PlanarCanonError):
    """Input exceeds the size bound of a brute-force routine."""
