"""Exception types shared by every module."""


class HMError(ValueError):
    """Invalid input or an unsatisfied precondition."""


class IdentityViolation(ArithmeticError):
    """Two formulas that must agree exactly produced different values."""
