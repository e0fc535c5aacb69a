"""Exception hierarchy shared by all modules."""


class RejectLabError(Exception):
    pass


class ConstraintViolation(RejectLabError, ValueError):
    """A cost matrix, threshold pair or model parameter breaks a required inequality.

    ``constraint`` names the broken inequality so callers (the CLI in
    particular) can report it verbatim.
    """

    def __init__(self, message: str, constraint: str | None = None):
        super().__init__(message)
        self.constraint = constraint


class DegenerateThresholds(ConstraintViolation):
    pass


class ZeroMixtureDensity(RejectLabError, ValueError):
    pass


class InconsistentPair(RejectLabError, ValueError):
    pass


class InconsistentInput(RejectLabError, ValueError):
    pass


class DegenerateTarget(RejectLabError, ValueError):
    pass
