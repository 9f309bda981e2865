# hommodels/errors.py
from __future__ import annotations


class HomModelsError(Exception):
    """Base class for everything this package raises on purpose."""


class DomainError(HomModelsError, ValueError):
    """A precondition of an operation was violated."""


class GraphError(DomainError):
    pass


class PosetError(DomainError):
    pass


class ComplexError(DomainError):
    pass


class HomComplexError(DomainError):
    pass


class FormatError(HomModelsError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BudgetExceeded(HomModelsError):
    def __init__(self, budget: str, limit: int, observed: int):
        self.budget = budget
        self.limit = limit
        self.observed = observed
        super().__init__(f"{budget} budget exceeded: {observed} > {limit}")
