"""Exception types shared across the library."""


class GotzcalcError(Exception):
    """Base class for all domain errors raised by this package."""


class NotIntegerValued(GotzcalcError):
    """A polynomial takes a non-integer value at some integer argument."""


class NoGotzmannRepresentation(GotzcalcError):
    """The polynomial is not the Hilbert polynomial of any projective scheme."""


class NotStronglyStable(GotzcalcError):
    """A regularity formula was applied to an ideal that is not strongly stable."""


class WrongShape(GotzcalcError):
    """A polynomial does not have the degree/leading coefficient the operation needs."""


class NonIntegralChern(GotzcalcError):
    """Solving for Chern classes produced non-integer values."""


class InfeasibleEmbedding(GotzcalcError):
    """Requested Grassmannian codimension is negative or exceeds the ambient dimension."""


class InconsistencyError(GotzcalcError):
    """A built-in cross-check failed; indicates a bug, never expected at runtime."""
