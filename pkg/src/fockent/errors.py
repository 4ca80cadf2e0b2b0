"""Typed exceptions shared by every module in the package."""


class FockError(Exception):
    """Base class for all domain errors raised by this package."""


class MixedParticleNumber(FockError):
    """State terms do not all share one total particle number."""

    def __init__(self, message: str, term_index: int | None = None):
        super().__init__(message)
        self.term_index = term_index


class PauliViolation(FockError):
    """A fermionic mode was asked to hold more than one particle."""

    def __init__(self, message: str, term_index: int | None = None):
        super().__init__(message)
        self.term_index = term_index


class ZeroState(FockError):
    """An operation that needs a nonzero state vector received the zero vector."""


class IncompatibleStates(FockError):
    """Two objects disagree on statistics, mode count, or particle number."""


class NotSymmetric(FockError):
    """A first-quantized tensor or coefficient matrix is not symmetric."""


class NotAntisymmetric(NotSymmetric):
    """A first-quantized tensor or coefficient matrix is not antisymmetric."""


class CapacityExceeded(FockError):
    """A dense product tensor would exceed the supported entry budget."""


class BadOrder(FockError):
    """A reduced-density-matrix order n lies outside 1..N."""


class BadPartition(FockError):
    """A mode partition or orbit grouping is malformed for the given state."""


class NotHermitian(FockError):
    """An observable element table is not Hermitian."""


class NotPSD(FockError):
    """A density matrix has an eigenvalue below the negativity tolerance."""


class NotTwoParticle(FockError):
    """A pair-coefficient operation received a state with N != 2."""


class NotHalfFilled(FockError):
    """A state does not hold exactly one particle per orbit."""


class ParseError(FockError):
    """A state or unitary file could not be parsed.

    Carries the one-based line and column of the offending text when the
    underlying reader can locate it.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column
