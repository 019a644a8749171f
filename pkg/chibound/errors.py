# ---------------------------------------------------------------------------------------
# CHIBOUND ERRORS - errors.py
# ---------------------------------------------------------------------------------------
# Every failure the library can signal. Each class carries its payload as attributes
# and the CLI exit code it maps to (0 ok, 1 rejection, 2 parse/usage, 3 theory).
# ---------------------------------------------------------------------------------------


class ChiboundError(Exception):
    """Base class. Subclasses set exit_code."""
    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message

    def to_dict(self):
        return {"error": type(self).__name__, "message": self.message}


class InputError(ChiboundError):
    """Precondition or usage failure on caller-supplied data."""
    exit_code = 2


class ParseError(InputError):
    def __init__(self, message, offset=None, line=None):
        location = ""
        if offset is not None:
            location = f" (byte offset {offset})"
        elif line is not None:
            location = f" (line {line})"
        super().__init__(message + location)
        self.offset = offset
        self.line = line


class SchemaError(ParseError):
    def __init__(self, field, message):
        super().__init__(f"field '{field}': {message}")
        self.field = field


class SizeError(InputError):
    def __init__(self, what, limit, actual):
        super().__init__(f"{what}: {actual} exceeds limit {limit}")
        self.limit = limit
        self.actual = actual


class ConfigError(InputError):
    pass


class CapacityError(ChiboundError):
    """A palette is smaller than the clique number of the piece it must colour."""
    exit_code = 3

    def __init__(self, needed, available):
        super().__init__(f"palette too small: piece needs {needed} colours, {available} available")
        self.needed = needed
        self.available = available


class NotCographError(ChiboundError):
    """Raised by cotree construction; witness is an induced P4."""

    def __init__(self, witness):
        super().__init__(f"graph contains an induced P4 on {list(witness.vertices)}")
        self.witness = witness


class OutOfClassError(ChiboundError):
    def __init__(self, witness):
        super().__init__(f"graph is not (P2+P4, diamond)-free: induced {witness.kind.value} on {list(witness.vertices)}")
        self.witness = witness


class TheoryViolation(ChiboundError):
    """A structural fact the colouring argument relies on failed at runtime."""
    exit_code = 3

    def __init__(self, property_id, detail, state=None, witness=None):
        super().__init__(f"[{property_id}] {detail}")
        self.property_id = property_id
        self.detail = detail
        self.state = state or {}
        self.witness = witness

    def to_dict(self):
        payload = super().to_dict()
        payload["property"] = self.property_id
        payload["state"] = self.state
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        return payload


class SearchCancelled(ChiboundError):
    pass
