# encoding: utf-8
"""
Exceptions, warnings and small helpers shared by all pyGentle modules.

Exceptions:
    GentleError
    GentleSyntaxError
    NotGentleError
    NonComposableError
    InvalidParametersError
    InvalidJunctionError
    NotPrimitiveError
    DegreeMismatchError
    KindMismatchError
    D2NotZeroError
    RealizationMismatchError
    FieldTooSmallError
    InfiniteComplexError

Warnings:
    DisconnectedQuiverWarning

Utility functions:
    is_listlike()
    warn()

$Id$
"""

import logging
import warnings

logger = logging.getLogger("pyGentle")

SCHEMA_VERSION = 1


class GentleError(Exception):
    """Base class for all errors raised by pyGentle."""
    pass

class GentleSyntaxError(GentleError):
    """Malformed bound-quiver description or word literal."""

    def __init__(self, message, line_number=None):
        GentleError.__init__(self, message)
        self.message = message
        self.line_number = line_number

    def __str__(self):
        if self.line_number is None:
            return self.message
        return "line %d: %s" % (self.line_number, self.message)

class NotGentleError(GentleError):
    """The bound quiver violates one or more of the gentleness conditions."""

    def __init__(self, violations):
        self.violations = list(violations)
        GentleError.__init__(self, str(self))

    def __str__(self):
        return "not gentle:\n" + "\n".join("  condition (%d): %s" % v for v in self.violations)

class NonComposableError(GentleError):
    """Attempt to compose paths whose endpoints do not match."""
    pass

class InvalidParametersError(GentleError):
    """Inappropriate parameter values for a constructor or generator."""
    pass

class InvalidJunctionError(GentleError):
    """Two consecutive homotopy letters violate a junction condition."""

    def __init__(self, index, condition, detail=""):
        self.index = index
        self.condition = condition
        self.detail = detail
        GentleError.__init__(self, str(self))

    def __str__(self):
        msg = "junction at letter %d violates %s" % (self.index, self.condition)
        if self.detail:
            msg += " (%s)" % self.detail
        return msg

class NotPrimitiveError(GentleError):
    """A homotopy band is a proper power of a shorter band."""
    pass

class DegreeMismatchError(GentleError):
    """Degrees or endpoints of homotopy letters do not fit together."""
    pass

class KindMismatchError(GentleError):
    """An operation was applied to the wrong kind of homotopy word."""
    pass

class D2NotZeroError(GentleError):
    """A built complex does not square to zero. This indicates a bug."""
    pass

class RealizationMismatchError(GentleError):
    """A basis morphism does not realize to a chain map. This indicates a bug."""
    pass

class FieldTooSmallError(GentleError):
    """The chosen prime field cannot represent a required scalar."""
    pass

class InfiniteComplexError(GentleError):
    """Exact linear algebra was requested on an unbounded complex."""
    pass

class DisconnectedQuiverWarning(UserWarning):
    """The quiver is not connected."""
    pass


def is_listlike(obj):
    return hasattr(obj, "__len__") and not isinstance(obj, str)

def warn(message, category=UserWarning):
    """Log a warning and pass it on to the warnings machinery."""
    logger.warning(message)
    warnings.warn(message, category, stacklevel=3)
