class QholError(Exception):
    pass


class BudgetExceeded(QholError):
    """A search or closure ran past its node/element budget.

    ``partial`` carries whatever count had been reached, so callers can mark a
    report row as inconclusive instead of silently treating it as a negative.
    """

    def __init__(self, what, budget, partial=None):
        self.what = what
        self.budget = budget
        self.partial = partial
        msg = f"{what}: budget {budget} exceeded"
        if partial is not None:
            msg += f" (partial count {partial})"
        super().__init__(msg)


class SpecError(QholError, ValueError):
    pass


class InternalCheckError(QholError, AssertionError):
    """A theorem-level identity failed; this means a bug, not bad input."""
