"""Exception hierarchy shared by every layer of the package."""


class DiffRecError(Exception):
    """Base class; ``name`` is the short error name shown by the CLI."""

    name = "DiffRecError"

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f"{self.name}: {self.message}" if self.message else self.name


class ZeroDenominator(DiffRecError, ZeroDivisionError):
    name = "ZeroDenominator"


class DivisionByZero(DiffRecError, ZeroDivisionError):
    name = "DivisionByZero"


class NotInvertible(DiffRecError, ZeroDivisionError):
    name = "NotInvertible"


class FieldMismatch(DiffRecError, TypeError):
    name = "FieldMismatch"


class EmptyPrefix(DiffRecError, ValueError):
    name = "EmptyPrefix"


class PrefixTooShort(DiffRecError, ValueError):
    name = "PrefixTooShort"


class NotMonic(DiffRecError, ValueError):
    name = "NotMonic"


class ZeroPolynomial(DiffRecError, ValueError):
    name = "ZeroPolynomial"


class ArityMismatch(DiffRecError, ValueError):
    name = "ArityMismatch"


class NoAnnihilator(DiffRecError, ValueError):
    """A bounded annihilator search came back empty where one was guaranteed."""

    name = "NoAnnihilator"


class ParseError(DiffRecError, ValueError):
    """Malformed expression text. ``pos`` is the 0-based offset of the bad token."""

    name = "SyntaxError"

    def __init__(self, message, pos=None, text=None):
        super().__init__(message)
        self.pos = pos
        self.text = text

    def __str__(self):
        s = f"{self.name}: {self.message}"
        if self.pos is not None:
            s += f" at position {self.pos}"
            if self.text is not None:
                s += f"\n  {self.text}\n  {' ' * self.pos}^"
        return s
