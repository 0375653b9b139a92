"""Exception types shared across the package."""


class HomstructError(Exception):
    """Base class for all domain errors."""


class FieldError(HomstructError):
    """Bad field descriptor or non-field modulus."""


class FieldMismatchError(HomstructError):
    """Operands live over different fields."""


class ShapeError(HomstructError):
    """Dimensions of tensors or maps do not agree."""


class ScalarParseError(HomstructError):
    """A scalar literal could not be parsed exactly."""


class MissingMapError(HomstructError):
    """A structure does not declare the requested map."""


class InvalidStructureError(HomstructError):
    """A structure failed structural validation."""

    def __init__(self, message, findings=()):
        super().__init__(message)
        self.findings = tuple(findings)


class ConstructionError(HomstructError):
    """A construction's precondition failed."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NotEligibleError(ConstructionError):
    """Input does not satisfy a unit-extension eligibility requirement."""


class BudgetExceededError(HomstructError):
    """A search space is larger than the configured budget."""


class DocumentError(HomstructError):
    """A structure document could not be parsed."""
