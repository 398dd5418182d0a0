"""Exception hierarchy shared by all modules."""


class HypergraphError(ValueError):
    """Base class for invalid arguments to hypergraph operations."""


class ArityError(HypergraphError):
    pass


class VertexRange(HypergraphError):
    pass


class DuplicateVertexInEdge(HypergraphError):
    pass


class UniformityTooLow(HypergraphError):
    pass


class UniformityMismatch(HypergraphError):
    pass


class BadTarget(HypergraphError):
    pass


class SetTooLarge(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class NoEdges(HypergraphError):
    pass


class TooFewColors(HypergraphError):
    pass


class KTooSmall(HypergraphError):
    pass


class BadM(HypergraphError):
    pass


class PreconditionViolated(HypergraphError):
    """A caller-side precondition does not hold (distinct from search failure)."""


class SeedNotFree(HypergraphError):
    pass


class HgParseError(HypergraphError):
    """Malformed ``.hg`` input; the message carries the offending line number."""


class BudgetExceeded(RuntimeError):
    """Raised only when a caller asks for strict budgets; searches normally
    return a result flagged ``exhaustive=False`` instead."""
