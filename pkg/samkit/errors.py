"""
Exceptions raised by samkit. Everything the library raises on bad input derives from SamkitError, so the command
line front end can turn them into exit code 1 without catching unrelated bugs.
"""


class SamkitError(Exception):
    pass


class ParameterDomainError(SamkitError, ValueError):
    """A numeric parameter is outside the range the operation is defined on."""


class ShapeError(SamkitError, ValueError):
    pass


class InputError(SamkitError, ValueError):
    """The data handed in cannot be used, e.g. a single class or an empty sample."""


class EnumerationSizeError(SamkitError, ValueError):
    pass


class DegenerateDirectionError(SamkitError, ArithmeticError):
    """
    Raised when a PLS component has zero covariance with the labels, or a score vector vanishes while deflating.
    @param component: 1-based index of the component that could not be extracted
    """

    def __init__(self, message: str, component: int = 0):
        super().__init__(message)
        self.component = component


class DataFormatError(SamkitError, ValueError):
    """
    A file on disk breaks the expected format. Row and column are 1-based and refer to the line and field in the
    file, None when the problem is not tied to a single cell.
    """

    def __init__(self, message: str, path=None, row=None, column=None):
        location = []
        if path is not None:
            location.append(str(path))
        if row is not None:
            location.append(f"line {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.path = path
        self.row = row
        self.column = column
