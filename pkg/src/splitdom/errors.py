"""Exception hierarchy shared across the package."""


class SplitdomError(Exception):
    """Base class for all package errors."""


class VertexOutOfRange(SplitdomError):
    """An edge endpoint or vertex index is not in 0..n-1."""


class LoopRejected(SplitdomError):
    """A self-loop (u, u) was supplied; only simple graphs are supported."""


class NTooLarge(SplitdomError):
    """Vertex count exceeds the 32-vertex representation limit."""


class MalformedGraph6(SplitdomError):
    """Input line is not a valid graph6 encoding."""


class VertexNotInSet(SplitdomError):
    """Private-neighbor query for a vertex outside the queried set."""


class PropertyNotSatisfied(SplitdomError):
    """Extremality asked for a set that does not satisfy the property."""


class DisconnectedInput(SplitdomError):
    """Operation requires a connected graph."""


class TooLargeForOracle(SplitdomError):
    """Naive oracle refuses graphs above its cost guard (n > 12)."""


class TooLargeForSolver(SplitdomError):
    """Exact solvers refuse graphs above their design target (n > 16)."""


class SpecOutOfRange(SplitdomError):
    """Family specification violates the family's size invariants."""


class NoFormulaForFamily(SplitdomError):
    """No closed-form expected values exist for the requested family."""


class EmptyCorpus(SplitdomError):
    """Corpus stream contained no usable graphs."""
