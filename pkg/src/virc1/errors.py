"""Exception hierarchy shared by the compute modules and the CLI."""


class Virc1Error(Exception):
    """Base class for all library errors."""


class DomainError(Virc1Error, ValueError):
    """An argument lies outside the domain of the operation."""


class StructuralError(Virc1Error, ValueError):
    """A value is malformed (wrong length, wrong shape, unsorted parts)."""


class SectorMismatchError(Virc1Error, ValueError):
    """Two characters whose offsets differ by a non-integer were combined."""


class InconsistentBranchingError(Virc1Error, ArithmeticError):
    """Peeling produced a negative coefficient."""


class OutOfHypothesisError(Virc1Error, ValueError):
    """A formula was invoked outside the hypotheses under which it holds."""


class ConsistencyError(Virc1Error, ValueError):
    """Caller-supplied data contradicts the restriction formula."""
