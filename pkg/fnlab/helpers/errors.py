# coding=UTF-8
"""Exceptions raised by fnlab.

Every error is a ValueError so callers that only care about "bad input" can catch that. The CLI maps any
ValueError (and argparse failures) to exit code 2.
"""
from typing import Any, Optional


class FNLabError(ValueError):
    """Base class of all fnlab errors."""


class FormatError(FNLabError):
    """Malformed text input (poset, mapping, expression, interval or order files)."""


class CycleError(FNLabError):
    """The declared order is not antisymmetric."""


class UnknownElement(FNLabError):
    """An id or element is not part of the structure it is used with."""


class DomainMismatch(FNLabError):
    """Maps or structures do not compose (source/target disagree)."""


class ArityMismatch(FNLabError):
    """Free algebra elements of different arity were combined."""


class NotBelow(FNLabError):
    """An interpolant was requested for a pair a, b with a not below b."""


class SizeLimitExceeded(FNLabError):
    """A materialization would exceed a configured cap (see fnlab.data.settings.Limits)."""


class FamilyTooLarge(FNLabError):
    """An independence test was requested for too many elements."""


class CarrierMismatch(FNLabError):
    """A mapping is checked or combined against a structure it is not defined on."""


class NotAnEnumeration(FNLabError):
    """A sequence does not list every element of the structure exactly once."""


class WitnessInvalid(FNLabError):
    """A cofinal/coinitial witness family fails its defining property."""


class PreconditionFailed(FNLabError):
    """An input mapping or structure does not satisfy the precondition of a construction."""


class NotARetraction(FNLabError):
    """The maps i: A -> B, j: B -> A are not order preserving with j.i = id."""


class NotAChain(FNLabError):
    """A sequence of carriers is not increasing."""


class NotExtending(FNLabError):
    """A mapping in a chain does not extend its predecessor."""


class NotAnIdeal(FNLabError):
    """A subset of a Boolean algebra is not an ideal."""


class NotASubstructure(FNLabError):
    """A subset of a Boolean algebra is not closed under the Boolean operations."""


class NotClosed(FNLabError):
    """A subset is not closed under a mapping (or the algebra operations)."""


class OrderMismatch(FNLabError):
    """Interval elements over different linear orders were combined."""


class NotALinearOrder(FNLabError):
    """A strategy that needs a chain was run on a structure that is not one."""


class EmptyResult(FNLabError):
    """A construction produced nothing to report."""


class ClosureExceedsBound(FNLabError):
    """A closure strategy produced a move set at or above the move bound."""


class IllegalMove(FNLabError):
    """A strategy broke the chain condition or the move bound.

    :param message: Description of the violation
    :param player: The offending player ("I" or "II")
    :param round_index: Round in which the move was made
    """

    def __init__(self, message: str, player: Optional[str] = None, round_index: Optional[Any] = None):
        """Instantiate IllegalMove."""
        super().__init__(message)
        self.player = player
        self.round_index = round_index


class BoundExceeded(FNLabError):
    """An extensional mapping has a value set at or above its size bound."""
