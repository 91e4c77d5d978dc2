"""Exception types raised by the library."""


class HenselError(Exception):
    """Base class for every error raised by nchensel."""


class ContextMismatch(HenselError, ValueError):
    pass


class DivisionByZero(HenselError, ZeroDivisionError):
    pass


class NoAutomorphism(HenselError, ValueError):
    pass


class NoDerivation(HenselError, ValueError):
    pass


class NotCoprime(HenselError, ValueError):
    pass


class DegreeTooLarge(HenselError, ValueError):
    pass


class UnsupportedField(HenselError, ValueError):
    pass


class NotAUnit(HenselError, ValueError):
    pass


class NotInIdealPower(HenselError, ValueError):
    pass


class NotASimpleRoot(HenselError, ValueError):
    pass


class ResidueFactorizationMismatch(HenselError, ValueError):
    pass


class BlockProductMismatch(HenselError, ValueError):
    pass


class SearchSpaceTooLarge(HenselError, ValueError):
    pass


class ParseError(HenselError, ValueError):
    """Malformed text input; ``position`` is a 0-based offset into ``text``."""

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class ObstructionError(HenselError):
    """A lifting stage could not be completed; the evidence is in ``report``."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            f"lifting obstructed at stage {report.stage} "
            f"({report.classification.name}); residual leading form {report.residual_leading_form}"
        )
