"""Exception hierarchy shared by all gfree modules.

Every domain error raised by the package derives from GfreeError so the
CLI can map any of them to exit code 2.
"""

from __future__ import annotations


class GfreeError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(GfreeError):
    """A text input (graph file, cotree file, tree file) failed to parse."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.col = col


class DuplicateVertexError(GfreeError):
    """Vertex names must be pairwise distinct."""


class UnknownEndpointError(GfreeError):
    """An edge refers to a vertex that was not declared."""


class SelfLoopError(GfreeError):
    """Edges must join two distinct vertices."""


class LengthMismatchError(GfreeError):
    """Parallel lists (parts/labels) must have equal length."""


class BadSizeError(GfreeError):
    """A numeric size parameter is out of range."""


class BadPartialError(GfreeError):
    """A partial vertex map is not injective or uses unknown vertices."""


class EmptyGraphError(GfreeError):
    """The operation needs a nonempty graph."""


class UnknownVertexError(GfreeError):
    """A named vertex or leaf does not occur in the input."""


class SameVertexError(GfreeError):
    """The operation needs two distinct vertices."""


class NotCographError(GfreeError):
    """The graph contains an induced P4; carries a witness when known.

    witness: tuple of four vertex names inducing a path, in path order,
    or () when the offending graph was identified indirectly.
    """

    def __init__(self, message: str, witness: tuple[str, ...] = ()):
        super().__init__(message)
        self.witness = witness


class InvalidCotreeError(GfreeError):
    """A cotree value violates the structural invariants; carries the report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class TooLargeError(GfreeError):
    """Input exceeds the documented size bound of a brute-force routine."""


class LastLeafError(GfreeError):
    """Cannot delete the only leaf of a cotree."""


class EmptyIndexSetError(GfreeError):
    """The antichain index set must be nonempty."""


class ForbiddenInsideP4Error(GfreeError):
    """The forbidden graph embeds into P4, so the construction is undefined."""


class MalformedEncodingError(GfreeError):
    """A graph handed to the decoder is not a valid gadget encoding."""


class NotIsomorphismError(GfreeError):
    """A supplied vertex map is not an isomorphism between its graphs."""


class NotOrderThreeError(GfreeError):
    """The supplied permutation does not have order exactly 3."""


class NotAnExtensionError(GfreeError):
    """The graph does not extend the base structure as required."""


class BaseNotFreeError(GfreeError):
    """The base graph already contains the forbidden induced subgraph."""


class UnknownConstantError(GfreeError):
    """A formula constant does not occur among the target's constants."""
