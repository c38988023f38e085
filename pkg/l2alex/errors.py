"""Exceptions raised by the l2alex engine."""

from typing import Any, Dict, Optional, Sequence


class L2AlexError(Exception):
    """Base class for errors raised while building links or computing torsions."""

    code = "error"
    exit_status = 1

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used by the JSON command-line output."""
        return {"code": self.code, "message": self.message}


class InvalidParameters(L2AlexError):
    """Exception raised when a constructor receives parameters outside its domain."""

    code = "invalid_parameters"

    def __init__(self, node: str, reason: str):
        self.node = node
        self.reason = reason
        super().__init__(f"Invalid parameters for {node}: {reason}")


class SplitLink(L2AlexError):
    """Exception raised when a construction needs a non-split operand and gets a split one."""

    code = "split_link"

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Split link: {reason}")


class UnsupportedConstruction(L2AlexError):
    """Exception raised when no torsion rule applies to a constructor node."""

    code = "unsupported_construction"

    def __init__(self, node: str):
        self.node = node
        super().__init__(f"No torsion rule applies to {node}")


class DimensionMismatch(L2AlexError):
    """Exception raised when vectors, forms or matrices have incompatible sizes."""

    code = "dimension_mismatch"

    def __init__(self, expected: int, actual: int, what: str = "coefficient vector"):
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, got {actual}")


class BadFraming(L2AlexError):
    """Exception raised when a surgery framing matrix does not have determinant one."""

    code = "bad_framing"

    def __init__(self, p: int, q: int, r: int, s: int):
        self.p, self.q, self.r, self.s = p, q, r, s
        super().__init__(
            f"Surgery framing (p, q, r, s) = ({p}, {q}, {r}, {s}) has determinant "
            f"{p * s - q * r}, expected 1"
        )


class NotASeminorm(L2AlexError):
    """Exception raised when geometry is requested for an exponent that is not a seminorm."""

    code = "not_a_seminorm"

    def __init__(self, exponent_text: str):
        self.exponent_text = exponent_text
        super().__init__(f"Exponent {exponent_text} is not a seminorm")


class DimensionTooLarge(L2AlexError):
    """Exception raised when dual-ball geometry exceeds the configured limits."""

    code = "dimension_too_large"

    def __init__(self, dimension: int, limit: int, what: str = "dimension"):
        self.dimension = dimension
        self.limit = limit
        super().__init__(f"Dual ball {what} {dimension} exceeds the limit {limit}")


class MissingDeclaration(L2AlexError):
    """Exception raised when a determinant input lacks a required declaration."""

    code = "missing_declaration"

    def __init__(self, what: str):
        self.what = what
        super().__init__(f"Missing declaration: {what}")


class ZeroTorsion(L2AlexError):
    """Exception raised when an operation needs a nonzero torsion class."""

    code = "zero_torsion"

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Torsion vanishes: {reason}")


class TraceMismatch(L2AlexError):
    """Exception raised when replaying a derivation step gives a different result."""

    code = "trace_mismatch"

    def __init__(self, rule: str, recorded: str, replayed: str):
        self.rule = rule
        super().__init__(f"Replaying {rule} gave {replayed}, trace recorded {recorded}")


class DslSyntaxError(L2AlexError):
    """Exception raised when link expression source text cannot be parsed."""

    code = "syntax_error"
    exit_status = 2

    def __init__(self, message: str, line: int, column: int, source: Optional[str] = None):
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{message} at line {line}, column {column}")

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({"line": self.line, "column": self.column})
        return data


def require_length(values: Sequence[Any], expected: int, what: str) -> None:
    """Raise DimensionMismatch unless ``values`` has ``expected`` entries."""
    if len(values) != expected:
        raise DimensionMismatch(expected, len(values), what)
