"""Exceptions raised by convnls."""

###################################################################################################
###################################################################################################

class ConfigError(ValueError):
    """Raised for an invalid run configuration.

    Attributes
    ----------
    key : str or None
        The offending configuration key, if known.
    line, col : int or None
        Location of a parse error in the configuration file, if known.
    """

    def __init__(self, message, key=None, line=None, col=None):

        self.key = key
        self.line = line
        self.col = col

        where = []
        if key is not None:
            where.append("key '{}'".format(key))
        if line is not None:
            where.append('line {}, column {}'.format(line, col))

        super().__init__(message if not where else '{} ({})'.format(message, ', '.join(where)))


class SnapshotError(ValueError):
    """Raised when a snapshot file cannot be read."""

    def __init__(self, message, path=None):

        self.path = path
        super().__init__(message if path is None else "{}: '{}'".format(message, path))


class NumericalError(RuntimeError):
    """Base class for numerical failures, carrying the best iterate found.

    Attributes
    ----------
    residual : float or None
        Residual norm of the best iterate.
    """

    def __init__(self, message, residual=None):

        self.residual = residual
        super().__init__(message)


class IntegratorStepError(NumericalError):
    """Raised when the norm drift of a trajectory exceeds its limit."""

    def __init__(self, message, drift=None, state=None):

        self.drift = drift
        self.state = state
        super().__init__(message, residual=drift)


class StripSolveError(NumericalError):
    """Raised when Gauss-Newton on a strip fails; ``grid`` holds the best iterate."""

    def __init__(self, message, grid=None, residual=None, iterations=None):

        self.grid = grid
        self.iterations = iterations
        super().__init__(message, residual=residual)


class ContinuationError(NumericalError):
    """Raised when continuation in T reaches its minimum step."""

    def __init__(self, message, state=None, residual=None):

        self.state = state
        super().__init__(message, residual=residual)


class NewtonError(NumericalError):
    """Raised when fixed point refinement fails; ``iterate`` holds the best iterate."""

    def __init__(self, message, iterate=None, residual=None):

        self.iterate = iterate
        super().__init__(message, residual=residual)
