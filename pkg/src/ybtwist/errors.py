"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`YBError`,
so callers (the CLI in particular) can tell a mathematical or input failure
apart from a bug.
"""

from __future__ import annotations


class YBError(ValueError):
    pass


class MalformedInput(YBError):
    """Shape, range or type problem in raw data."""


class RowNotBijective(MalformedInput):
    def __init__(self, row: int):
        super().__init__(f"row {row} is not a permutation (L_{row} not invertible)")
        self.row = row


class ColumnNotBijective(MalformedInput):
    def __init__(self, column: int):
        super().__init__(f"column {column} is not a permutation (R_{column} not invertible)")
        self.column = column


class NotPermutation(MalformedInput):
    pass


class ShapeMismatch(MalformedInput):
    pass


class NotQuadraticSet(YBError):
    """The pair table r is not a bijection of X x X."""


class NotRightCyclic(YBError):
    pass


class NotNondegenerate(YBError):
    pass


Degenerate = NotNondegenerate


class NotInvolutive(YBError):
    pass


class NotDistributive(YBError):
    pass


class HypothesisViolated(YBError):
    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("hypotheses violated: " + "; ".join(self.failures))


class BudgetExceeded(YBError):
    def __init__(self, degree: int, entries: int, cap: int):
        super().__init__(f"degree {degree} needs {entries} matrix entries, cap is {cap}")
        self.degree = degree
        self.entries = entries
        self.cap = cap


class RankMismatch(YBError):
    """Exact and modular elimination disagree; results cannot be trusted."""


class SizeUnsupported(YBError):
    pass
