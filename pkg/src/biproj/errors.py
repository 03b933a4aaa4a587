"""Exception types raised across the package."""


class BiprojError(Exception):
    """Base class for all package errors."""


class InvalidVertex(BiprojError, ValueError):
    def __init__(self, side: str, index: int, line: int | None = None):
        self.side = side
        self.index = index
        self.line = line
        msg = f"vertex index {index} out of range on side {side}"
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class MalformedMatrix(BiprojError, ValueError):
    def __init__(self, row: int, col: int, reason: str = "cell is not 0/1", line: int | None = None):
        self.row = row
        self.col = col
        self.line = line
        msg = f"malformed bi-adjacency matrix at row {row}, col {col}: {reason}"
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


class ParseError(BiprojError, ValueError):
    """Structural problem in an input file (bad header, wrong token count...)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionMismatch(BiprojError, ValueError):
    pass


class PreconditionViolated(BiprojError):
    pass


class UnsatisfiableSpec(BiprojError):
    pass
