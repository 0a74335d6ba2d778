"""Exception hierarchy.

Every error raised on bad input derives from :class:`InputError`; errors that
signal a broken internal invariant derive from :class:`InvariantViolation`.
Both carry an optional ``witness`` naming the offending elements.
"""

from __future__ import annotations

from typing import Any


class LatticeEntailmentError(Exception):
    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InputError(LatticeEntailmentError, ValueError):
    """Invalid input: the caller handed us something that fails validation."""


class InvariantViolation(LatticeEntailmentError, RuntimeError):
    """A condition guaranteed by the theory failed to hold at runtime."""


class ParseError(InputError):
    pass


class UnknownElement(InputError):
    pass


class ForeignElement(UnknownElement):
    """A statement refers to an element outside its context."""


class NotAPoset(InputError):
    pass


class NotALattice(InputError):
    pass


class NotDistributive(InputError):
    pass


class NotComplemented(InputError):
    pass


class ZeroAtoms(InputError):
    pass


class NotClosed(InputError):
    pass


class MissingBounds(InputError):
    pass


class NotAHom(InputError):
    pass


class NotInjective(NotAHom):
    pass


class SuccedentTooLarge(InputError):
    pass


class NoCounterexample(InputError):
    """Raised when the codomain is complemented, so conservation holds."""


class DegenerateLattice(InputError):
    pass


class NotAnInterpretation(InputError):
    pass


class ResourceLimit(InputError):
    pass


class InvalidSeed(InvariantViolation):
    pass


class ExtensionStuck(InvariantViolation):
    pass


class IllDefined(InvariantViolation):
    pass
