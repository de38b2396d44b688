"""Exception types shared across the calculator.

Everything raised on purpose derives from CalcError so callers (and the CLI)
can distinguish "the math refused" from a genuine bug.
"""

__all__ = [
    "CalcError",
    "BasisMismatch",
    "UnknownVariable",
    "DivisionByZero",
    "InexactDivision",
    "ParseError",
    "InvalidPD",
    "NotAKnot",
    "ResourceLimit",
    "UnknownLabel",
    "LabelMismatch",
    "NotSimplyConnected",
    "NonIntegralResult",
    "InvalidParameters",
    "RegimeError",
    "ChamberMismatch",
    "SimpleTypeRequired",
    "NotSymmetric",
    "MissingIntersectionData",
    "NotTaut",
    "NonIntegralDimension",
    "UnsupportedForSW",
    "TypeOdd",
    "OutOfBand",
    "KindError",
    "ScriptError",
]


class CalcError(Exception):
    """Base class for every deliberate failure in this package."""


# ---- Laurent polynomial layer ----

class BasisMismatch(CalcError):
    """Two polynomials over different variable bases were combined."""


class UnknownVariable(CalcError):
    """A variable name not present in the basis was referenced."""


class DivisionByZero(CalcError):
    """Exact division by the zero polynomial."""


class InexactDivision(CalcError):
    """Exact division failed: the quotient does not exist over Z."""


class ParseError(CalcError):
    """Polynomial text could not be parsed.

    Carries ``pos``, the 0-based offset of the offending character.
    """

    def __init__(self, message, pos=None):
        super().__init__(message)
        self.pos = pos


# ---- Knot layer ----

class InvalidPD(CalcError):
    """A planar diagram code violates the PD conventions."""


class NotAKnot(CalcError):
    """A one-component diagram was required but a link was supplied."""


class ResourceLimit(CalcError):
    """A configured node or size budget was exhausted."""


# ---- Manifold layer ----

class UnknownLabel(CalcError):
    """A surface label was not found on the manifold."""


class LabelMismatch(CalcError):
    """A surface label exists but has the wrong genus or self-intersection."""


class NotSimplyConnected(CalcError):
    """An operation valid only for simply connected manifolds was applied."""


class NonIntegralResult(CalcError):
    """An invariant that must be an integer came out fractional."""


class InvalidParameters(CalcError):
    """Operation parameters outside the valid range."""


# ---- Seiberg-Witten layer ----

class RegimeError(CalcError):
    """The value requested is not defined in this b+ regime."""


class ChamberMismatch(CalcError):
    """Two b+ = 1 values from different chambers were combined."""


class SimpleTypeRequired(CalcError):
    """A formula valid only for simple-type invariants was applied."""


class NotSymmetric(CalcError):
    """An input polynomial fails the required symmetry."""


class MissingIntersectionData(CalcError):
    """A basic class has no intersection row in the descent configuration."""


class NotTaut(CalcError):
    """Intersection data violates the taut configuration constraints."""


class NonIntegralDimension(CalcError):
    """The expected moduli dimension formula produced a non-integer."""


class UnsupportedForSW(CalcError):
    """The manifold description has no SW evaluation rule along this path."""


# ---- Geography layer ----

class TypeOdd(CalcError):
    """A spin-only congruence was asked of an odd manifold."""


class OutOfBand(CalcError):
    """A bound was requested outside the band where it holds."""


# ---- CLI / DSL layer ----

class KindError(CalcError):
    """A DSL name was used as the wrong kind of object."""


class ScriptError(CalcError):
    """Script evaluation failed; carries line and column for reporting."""

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.line = line
        self.col = col
