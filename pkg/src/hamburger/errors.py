"""Exception types shared across the package.

The CLI maps these onto exit codes: validation problems exit 1, exhausted
budgets exit 2 and broken internal invariants exit 3.
"""


class HamburgerError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class DimensionError(HamburgerError, ValueError):
    """Matrix shapes are not conformable for the requested operation."""


class StructureError(HamburgerError, ValueError):
    """A matrix lacks the structure an operation needs (e.g. unit triangular)."""


class InvalidGraphError(HamburgerError, ValueError):
    """A hamburger graph failed validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid hamburger graph: {lines}")


class RegionError(HamburgerError, ValueError):
    """A region or pillow specification is malformed."""


class BudgetExceeded(HamburgerError):
    """A brute-force routine would exceed its configured size bound."""

    exit_code = 2


class InvariantError(HamburgerError):
    """Two computations that must agree did not."""

    exit_code = 3
