"""Error types shared across the package."""


class ContractError(ValueError):
    """An input violates a documented precondition."""


class ComputationError(RuntimeError):
    """A numerical routine could not produce a trustworthy result."""
