"""
Exception hierarchy shared by every sub-package.
"""

from __future__ import annotations


class PadicHyperError(Exception):
    """Base class for all library errors."""


# --- padic -------------------------------------------------------------


class DenominatorDivisibleByP(PadicHyperError, ValueError):
    """A rational argument is not in Z_p."""


class DivisionByZero(PadicHyperError, ZeroDivisionError):
    pass


class PrecisionExhausted(PadicHyperError, ArithmeticError):
    """An operation needed unit digits that are not known."""


class InsufficientPrecision(PadicHyperError, ArithmeticError):
    """A congruence was requested beyond what the operands are known to."""


# --- gamma / teichmuller -----------------------------------------------


class RangeOverflow(PadicHyperError, OverflowError):
    """p^K exceeds the configured residue width."""


class MissingArgument(PadicHyperError, KeyError):
    """A gamma table was built without the requested argument."""


class ZeroArgument(PadicHyperError, ValueError):
    pass


# --- character sums ----------------------------------------------------


class BothTrivial(PadicHyperError, ValueError):
    pass


class JOutOfRange(PadicHyperError, ValueError):
    pass


# --- series ------------------------------------------------------------


class NonInvertibleDenominator(PadicHyperError, ArithmeticError):
    pass


class IntegerOverflow(PadicHyperError, OverflowError):
    pass


class NonIntegralPrefactor(PadicHyperError, ValueError):
    pass


class BeyondCache(PadicHyperError, LookupError):
    pass


class CorruptCache(PadicHyperError, ValueError):
    pass


class VersionMismatch(CorruptCache):
    pass


# --- verifier ----------------------------------------------------------


class UnknownIdentity(PadicHyperError, LookupError):
    pass
