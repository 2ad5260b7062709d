"""Exception hierarchy shared by all modules.

Validation failures (bad indices, bad parameters, inadmissible symbols)
raise InvalidInputError; failures of the numerics themselves (quadrature
non-convergence, divergent sums, QMC spread too large) raise NumericError.
The CLI maps these to exit codes 2 and 3 respectively.
"""


class DirspacesError(Exception):
    pass


class InvalidInputError(DirspacesError, ValueError):
    """Bad argument: invalid index, invalid measure parameter, failed precondition."""


class PoleError(InvalidInputError):
    """Evaluation requested at or beyond a pole / boundary of validity."""


class TruncationError(InvalidInputError):
    """Requested truncation cannot hold any coefficient of the result."""


class NumericError(DirspacesError, ArithmeticError):
    """A numerical routine failed to converge or produced non-finite values."""


class DivergenceError(NumericError):
    """A series or integral was detected to diverge."""
