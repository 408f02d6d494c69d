"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Graph input text does not conform to a supported format."""


class CapExceededError(ValueError):
    """An enumeration or construction would exceed its configured cap."""


class BudgetExhaustedError(RuntimeError):
    """An exact computation ran out of its node or time budget."""
