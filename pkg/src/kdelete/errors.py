"""Exception taxonomy shared across the package.

CapabilityError marks inputs the exact routines refuse (too large, not wrong),
BudgetExceeded marks an oracle search that ran out of its state budget, and the
PreconditionError subclasses report a forbidden substructure found during an
opt-in verification pass.  InvariantViolation means a guaranteed inequality
failed at runtime, which is always a bug worth surfacing loudly.
"""


class KDeleteError(Exception):
    """Base class for package errors."""


class CapabilityError(KDeleteError):
    """Input exceeds the documented size limits of an exact routine."""


class BudgetExceeded(CapabilityError):
    """Oracle search exhausted its state or time budget."""


class PreconditionError(KDeleteError):
    """A requested verification pass found a forbidden substructure."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TriangleFound(PreconditionError):
    pass


class CliqueFound(PreconditionError):
    pass


class WheelFound(PreconditionError):
    pass


class ForbiddenCyclePresent(PreconditionError):
    pass


class OddGirthTooSmall(PreconditionError):
    pass


class EmptyWorkingSet(KDeleteError):
    """Degree-sum of the working set is zero; nothing to extract."""


class InvariantViolation(KDeleteError):
    """A per-run guaranteed inequality failed to hold."""
