"""Exception hierarchy shared by all refpoly modules."""


class RefpolyError(Exception):
    """Base class for every error raised by refpoly."""


class InputError(RefpolyError, ValueError):
    """Malformed graph, vertex set, or polytope input."""


class DimensionError(RefpolyError, ValueError):
    """Point set is not full-dimensional, or dimensions do not match."""


class CapacityError(RefpolyError):
    """Requested computation exceeds a configured size cap."""


class UnboundedError(RefpolyError, ValueError):
    """Inequality system does not describe a bounded polytope."""


class InconsistencyError(RefpolyError, RuntimeError):
    """Internal cross-check failed (signals a bug, not bad input)."""


class HypothesisError(RefpolyError, ValueError):
    """A required hypothesis does not hold for the given input."""
