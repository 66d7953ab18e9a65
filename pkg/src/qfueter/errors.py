class DomainError(ValueError):
    """Input is well formed but outside the domain of the requested operation."""

    code = "domain_error"


class NotRegularError(DomainError):
    """A function failed the right-regularity pre-check."""

    code = "not_regular"

    def __init__(self, message, witness=None, value=None):
        super().__init__(message)
        self.witness = witness
        self.value = value


class ParseError(ValueError):
    code = "parse_error"

    def __init__(self, message, line=None, col=None, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        where = f" at line {line}, col {col}" if line is not None else ""
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message}{where}{exp}")

    @property
    def position(self):
        if self.line is None:
            return None
        return {"line": self.line, "col": self.col}


class SemanticError(ParseError):
    """Syntactically valid input with invalid meaning (negative exponent, bad basis)."""

    code = "semantic_error"
