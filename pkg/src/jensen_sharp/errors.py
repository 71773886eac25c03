"""Exception hierarchy shared by every module in the package."""


class JensenSharpError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(JensenSharpError, ValueError):
    """A construction parameter is outside its legal range."""


class DomainError(JensenSharpError, ValueError):
    """A point, sample, or support falls outside a function's natural domain."""


class EmptyCellError(JensenSharpError, ValueError):
    """A partition cell carries zero probability."""


class EvaluationError(JensenSharpError, ArithmeticError):
    """A function value required by a computation is not finite."""


class NumericError(JensenSharpError, ArithmeticError):
    """A numeric procedure failed to converge or to classify divergence."""


class LimitUndeterminedError(NumericError):
    """Endpoint probing oscillated and could not settle on a limit."""
