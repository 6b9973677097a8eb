"""
Exceptions and warning categories raised by :mod:`adjcut`.

Every error derives from :class:`AdjcutError`, itself a :class:`ValueError`,
so callers that only care about "bad input" can catch the builtin.
"""


class AdjcutError(ValueError):
    """Base class for all errors raised by this package."""


class GraphError(AdjcutError):
    """Unknown vertex label, empty label or self-loop."""


class CycleError(GraphError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        message = 'Graph is not acyclic; found the cycle ' + '->'.join(map(str, self.cycle))
        super().__init__(message)


class ProblemError(AdjcutError):
    """A causal problem instance violates one of its invariants."""


class CostError(ProblemError):
    """A vertex cost is malformed, too precise, or not strictly positive."""


class SeparatorError(AdjcutError):
    """A vertex set is not a (minimal) separator where one is required."""


class NoAdjustmentSetError(AdjcutError):
    """A cut of infinite capacity was asked to be mapped back to H1."""


class FlowConsistencyError(AdjcutError):
    """The sink is reachable by augmenting paths, so the flow is not maximum."""


class OracleLimitError(AdjcutError):
    """An exhaustive oracle was asked to enumerate beyond its hard cap."""


class RetryBudgetError(AdjcutError):
    def __init__(self, seed, attempts):
        self.seed = seed
        self.attempts = attempts
        super().__init__('could not draw a valid instance for seed {0} '
                         'after {1} attempts'.format(seed, attempts))


class ParseError(AdjcutError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = 'line {0}: {1}'.format(line, message)
        super().__init__(message)


class MissingCostWarning(UserWarning):
    """An observed candidate vertex has no cost and was given cost 1."""


class DiscardedCostWarning(UserWarning):
    """A cost was supplied for a vertex whose cost is never used."""
