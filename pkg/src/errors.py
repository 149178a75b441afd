"""Exception hierarchy shared by every layer."""


class NegtransError(ValueError):
    """Base class for all library errors."""


class FormulaSyntaxError(NegtransError):
    """Formula text does not conform to the grammar."""

    def __init__(self, text: str, line: int, column: int, detail: str = ""):
        self.text = text
        self.line = line
        self.column = column
        self.detail = detail
        message = f"syntax error at line {line}, column {column}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class UnsupportedFormulaError(NegtransError):
    """Formula lies outside what the requested procedure handles."""


class ModelError(NegtransError):
    """Kripke model is malformed or cannot be loaded."""


class ConfigError(NegtransError):
    """Invalid configuration or option combination."""
