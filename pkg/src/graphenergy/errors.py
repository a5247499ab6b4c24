class GraphEnergyError(Exception):
    pass


class GraphFormatError(GraphEnergyError, ValueError):
    """Malformed edge-list or graph6 input.  ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GraphEnergyError, ValueError):
    pass


class PreconditionError(GraphEnergyError, ValueError):
    pass


class ConvergenceError(GraphEnergyError, ArithmeticError):
    pass


class TraceOverflowError(GraphEnergyError, OverflowError):
    pass


class CensusInconsistencyError(GraphEnergyError, ArithmeticError):
    pass
