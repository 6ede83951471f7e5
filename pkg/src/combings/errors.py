"""Exceptions shared by the library and the command-line front end.

Operation preconditions raise DomainError subclasses (CLI exit code 2);
malformed input text raises ParseError, a ValueError (CLI exit code 1).
Each DomainError carries a short ``code`` naming the failed precondition.
"""

from __future__ import annotations


class DomainError(Exception):
    """An operation was called outside its stated domain."""

    code = "DomainError"


class NonTorsionError(DomainError):
    """A homology class or combing that must be torsion is not."""

    code = "NonTorsion"


class NotCharacteristicError(DomainError):
    """A coefficient vector fails c_i = B_ii (mod 2) at some index."""

    code = "NotCharacteristic"

    def __init__(self, index: int, message: str | None = None) -> None:
        self.index = index
        super().__init__(
            message
            or f"index {index}: coefficient parity differs from the framing parity"
        )


class CapExceededError(DomainError):
    """Torsion enumeration would exceed the requested cap."""

    code = "CapExceeded"

    def __init__(self, torsion_order: int, cap: int) -> None:
        self.torsion_order = torsion_order
        self.cap = cap
        super().__init__(f"torsion order {torsion_order} exceeds cap {cap}")


class DimensionMismatchError(DomainError):
    """Vector or matrix dimensions do not agree."""

    code = "DimensionMismatch"


class EvenCoefficientError(DomainError):
    """The coefficient over a +/-1-framed unknot must be odd."""

    code = "EvenCoefficient"


class BadEtaError(DomainError):
    """A twisting sign parameter must be +1 or -1."""

    code = "BadEta"


class NotZSphereError(DomainError):
    """The operation needs an integral homology sphere (or ball) ambient."""

    code = "NotZSphere"


class MissingClassesError(DomainError):
    """Framed link data lacks the ambient homology data required here."""

    code = "MissingClasses"


class ParseError(ValueError):
    """Input text does not describe a valid document."""
