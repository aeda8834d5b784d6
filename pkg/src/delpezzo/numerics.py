"""Exact arithmetic helpers.

All quantities in this package are integers or rationals; floating point is
never used.  Rationals are ``fractions.Fraction`` throughout, re-exported
here as :data:`ExactRatio` so call sites say what they mean.  ``binomial``
follows the enumerative convention of vanishing outside the Pascal triangle,
which lets splitting sums run over a rectangular index box without edge
cases.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NonIntegralResult

__all__ = [
    "ExactRatio",
    "binomial",
    "to_integer",
]

ExactRatio = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero when ``k < 0`` or ``k > n`` or ``n < 0``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def to_integer(value: int | Fraction, context: str = "") -> int:
    """Convert an exact rational to ``int``, raising if it is not integral.

    ``context`` is included in the error message so the caller can say which
    quantity failed (for example a curve class).
    """
    if isinstance(value, int):
        return value
    if value.denominator == 1:
        return int(value)
    where = f" in {context}" if context else ""
    raise NonIntegralResult(f"expected integer{where}, got {value}")
