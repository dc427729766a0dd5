"""Exception types shared across the package."""


class DPOError(ValueError):
    """Base class for invalid input to any operation in this package."""


class EqualPoints(DPOError):
    pass


class DuplicateId(DPOError):
    pass


class DuplicatePoint(DPOError):
    pass


class DuplicateVertex(DPOError):
    pass


class UnknownVertex(DPOError):
    pass


class SingletonEdge(DPOError):
    pass


class BadParameter(DPOError):
    pass


class NotContiguous(DPOError):
    pass


class TooLarge(Exception):
    """An exhaustive search was asked to run beyond its configured size bound."""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound
