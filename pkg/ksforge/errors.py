"""Exceptions raised by ksforge"""


class KsforgeError(Exception):
    """Base class of every ksforge error."""


class PauliParseError(KsforgeError, ValueError):
    """
    Raised when an observable symbol cannot be parsed.

    Attributes:
        text (str): the text that was parsed.
        position (int): 0-based index of the offending character.
    """

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse observable {text!r} at position {position}: {reason}")


class QubitMismatchError(KsforgeError, ValueError):
    """Raised when two operators act on a different number of qubits."""

    def __init__(self, left: int, right: int):
        super().__init__(f"qubit count mismatch: {left} != {right}")


class CapExceededError(KsforgeError):
    """Raised when a configured resource cap is exceeded."""

    def __init__(self, what: str, value: int, cap: int):
        self.value = value
        self.cap = cap
        super().__init__(f"{what} {value} exceeds the configured cap {cap}")


class DiagramError(KsforgeError, ValueError):
    """Raised for a malformed diagram or a diagram that is not a KS proof where one is needed."""


class DiagramFormatError(DiagramError):
    """
    Raised when a diagram file cannot be parsed.

    Attributes:
        line (int): 1-based line number of the offending line.
    """

    def __init__(self, line: int, reason: str):
        self.line = line
        super().__init__(f"line {line}: {reason}")


class KernelCapError(CapExceededError):
    """Raised when a GF(2) kernel is too large to enumerate."""

    def __init__(self, dimension: int, cap: int):
        self.dimension = dimension
        super().__init__("kernel dimension", dimension, cap)
