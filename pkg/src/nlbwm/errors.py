"""Exception types raised by the package."""


class BwmError(ValueError):
    """Base class for all validation and computation errors."""


class UnknownTermError(BwmError):
    """A linguistic term does not name a level of the given scale."""


class NonPositiveEntryError(BwmError):
    """A comparison vector contains a zero or negative entry."""


class RoleConflictError(BwmError):
    """Best and worst index sets are empty, out of range or overlapping."""


class RoleEntryError(BwmError):
    """Entries at best/worst positions contradict their roles.

    Raised when a role self-comparison differs from 1 or when the
    best-to-worst values implied by different role members disagree.
    """


class AggregationMismatchError(BwmError):
    """Group judgments have different sizes or role assignments."""


class NotConsistentError(BwmError):
    """Exact weights were requested for an inconsistent comparison system."""


class MiddleCriterionError(BwmError):
    """An index passed to a deviation formula is a best or worst criterion."""


class SingleRoleRequiredError(BwmError):
    """The legacy formulas only accept a unique best and worst criterion."""


class InfeasibleEpsilonError(BwmError):
    """Weight bounds were requested at an infeasible deviation level."""


class InvalidRatioError(BwmError):
    """A preference ratio is outside its admissible range."""
