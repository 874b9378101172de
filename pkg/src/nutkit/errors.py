"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`NutkitError`
so callers (notably the command line) can separate domain failures from bugs.
"""


class NutkitError(Exception):
    """Base class for all package errors."""


class UsageError(NutkitError, ValueError):
    """Arguments violate an operation's preconditions."""


# graph-core -----------------------------------------------------------------


class InvalidGraph(NutkitError, ValueError):
    """Adjacency rows violate symmetry, loop-freeness or range."""


class AdjListError(NutkitError, ValueError):
    """Base class for appendix adjacency-list parse errors."""


class MalformedList(AdjListError):
    pass


class AsymmetricList(AdjListError):
    pass


class VertexOutOfRange(AdjListError):
    pass


class DuplicateNeighbor(AdjListError):
    pass


class Graph6Error(NutkitError, ValueError):
    """Base class for graph6 decoding errors."""


class BadHeader(Graph6Error):
    pass


class TrailingBits(Graph6Error):
    pass


class LengthMismatch(Graph6Error):
    pass


class KTooSmall(UsageError):
    pass


class OddOrder(UsageError):
    pass


# exact-kernel ---------------------------------------------------------------


class NonSquare(UsageError):
    pass


class DimensionMismatch(UsageError):
    pass


# nut-analysis ---------------------------------------------------------------


class NotANut(NutkitError):
    pass


class IsolatedPivot(NutkitError):
    pass


# regular-gen ----------------------------------------------------------------


class InadmissibleSpec(UsageError):
    pass


class BudgetExceeded(NutkitError):
    """A computation would exceed (or did exceed) its allowed budget."""


# symmetry -------------------------------------------------------------------


class NotPlusMinusOne(NutkitError):
    pass


class OddDegree(UsageError):
    pass


# existence-catalog ----------------------------------------------------------


class CatalogCorrupt(NutkitError):
    pass


class InsufficientSeeds(NutkitError):
    pass


class ExclusionUnverified(NutkitError):
    pass


class InadmissiblePair(UsageError):
    pass
