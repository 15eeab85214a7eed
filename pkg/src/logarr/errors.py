class CutoffTooSmall(RuntimeError):
    """A degree cutoff did not reach a stabilization window."""

    def __init__(self, message, partial=None, cutoff=None):
        super().__init__(message)
        self.partial = partial
        self.cutoff = cutoff


class HypothesisFailed(RuntimeError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LimitDoesNotExist(ArithmeticError):
    def __init__(self, order, t_power, coefficient):
        super().__init__(
            f"limit does not exist: coefficient of u^{order} t^{t_power} is {coefficient}"
        )
        self.order = order
        self.t_power = t_power
        self.coefficient = coefficient


class ResolutionIncomplete(RuntimeError):
    pass


class GenericityViolated(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
