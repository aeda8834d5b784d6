"""Exception hierarchy for the delpezzo package.

Everything raised on purpose derives from :class:`DelPezzoError`, so callers
(and the CLI) can catch one type and map it to an exit code.
"""

from __future__ import annotations

__all__ = [
    "DelPezzoError",
    "RankMismatch",
    "RankOverflow",
    "InvalidClass",
    "NonIntegralResult",
    "NegativeCount",
    "RecursionFailure",
    "CacheFormatError",
    "SurfaceMismatch",
]


class DelPezzoError(Exception):
    """Base class for all errors raised by this package."""


class RankMismatch(DelPezzoError):
    """A curve class has the wrong number of coefficients for its surface."""


class RankOverflow(DelPezzoError):
    """An operation would need more than eight blown-up points."""


class InvalidClass(DelPezzoError):
    """A curve-class string or coefficient vector cannot be interpreted."""


class NonIntegralResult(DelPezzoError):
    """A quantity that must be an integer came out with a denominator."""


class NegativeCount(DelPezzoError):
    """An enumerative count that must be non-negative came out negative."""


class RecursionFailure(DelPezzoError):
    """The recursion could not reduce a class to known base cases."""


class CacheFormatError(DelPezzoError):
    """A cache file is malformed or has an unsupported version."""


class SurfaceMismatch(DelPezzoError):
    """A cache file or table belongs to a different surface."""
