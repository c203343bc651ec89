class InputError(ValueError):
    """Bad arguments: dimension mismatch, singular basis change, bad index, ..."""


class JacobiError(ValueError):
    """A bracket table that violates the Jacobi identity."""

    def __init__(self, violations, message=None):
        self.violations = list(violations)
        if message is None:
            shown = ", ".join(str(t) for t, _ in self.violations[:5])
            more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
            message = f"Jacobi identity fails on triples {shown}{more}"
        super().__init__(message)
