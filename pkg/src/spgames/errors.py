"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input: unknown ids, bad parameters, unparsable documents."""


class BudgetExceededError(RuntimeError):
    """A search ran out of its node budget before reaching a definite answer."""
