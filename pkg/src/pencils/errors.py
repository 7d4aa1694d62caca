"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for every domain error raised by this package."""


class DegreeMismatchError(AlgebraError, ValueError):
    """Operands have incompatible orders or multidegrees."""


class NotDivisibleError(AlgebraError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DegeneratePencilError(AlgebraError, ValueError):
    """The two forms of a pencil are linearly dependent."""


class FormulaViolationError(AlgebraError, RuntimeError):
    """An identity that must hold by construction failed; indicates a bug."""


class ParseError(AlgebraError, ValueError):
    """Malformed polynomial expression text.

    `position` is the 0-based index into the source string where the
    problem was detected.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
