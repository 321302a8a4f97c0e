"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class NovikovLabError(Exception):
    pass


class DimensionMismatch(NovikovLabError, ValueError):
    pass


class AmbientMismatch(NovikovLabError, ValueError):
    pass


class NotContained(NovikovLabError, ValueError):
    pass


class NotNilpotent(NovikovLabError, ValueError):
    pass


class NotACocycle(NovikovLabError, ValueError):
    """A bilinear form failed one of the two cocycle conditions.

    ``condition`` is ``"right-commutative"`` or ``"left-symmetric"`` and
    ``triple`` holds the 1-based basis indices where it failed.
    """

    def __init__(self, condition: str, triple: tuple[int, int, int], index: int | None = None):
        self.condition = condition
        self.triple = triple
        self.index = index
        where = "" if index is None else f"cocycle #{index}: "
        super().__init__(f"{where}{condition} condition fails on basis triple {triple}")


class NotAutomorphism(NovikovLabError, ValueError):
    pass


class MissingGeneratorWords(NovikovLabError, ValueError):
    pass


class UnknownDimension(NovikovLabError, KeyError):
    pass


class UnknownEntry(NovikovLabError, KeyError):
    pass


class ConstraintViolation(NovikovLabError, ValueError):
    pass


class UnboundParameter(NovikovLabError, NameError):
    def __init__(self, name: str):
        super().__init__(f"unbound parameter {name!r}")
        # NameError.__init__ resets .name, so set it afterwards.
        self.name = name


class DslSyntaxError(NovikovLabError, SyntaxError):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class IndexOutOfRange(NovikovLabError, IndexError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = "" if line is None else f"line {line}, column {column}: "
        super().__init__(f"{where}{message}")
