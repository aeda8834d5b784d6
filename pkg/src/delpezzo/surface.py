"""Second-homology lattices of the supported surfaces.

Two families are modelled: the projective plane blown up at ``k <= 8``
general points, and the quadric P1 x P1.

Coefficient conventions
-----------------------
Blow-up classes are integer vectors ``(d, m_1, ..., m_k)`` encoding

    beta = d*L - m_1*E_1 - ... - m_k*E_k,

where ``L`` is the line class (``L^2 = 1``) and ``E_i`` are the exceptional
classes (``E_i . E_j = -delta_ij``, ``L . E_i = 0``).  Note the minus sign:
the exceptional class ``E_i`` itself is the vector with ``d = 0`` and
``m_i = -1``.  Quadric classes are bidegrees ``(a, b)`` with respect to the
two rulings ``e_1, e_2`` (``e_1^2 = e_2^2 = 0``, ``e_1 . e_2 = 1``).

The anticanonical class is ``3L - E_1 - ... - E_k``, i.e. the vector
``(3, 1, ..., 1)``, and ``2e_1 + 2e_2 = (2, 2)`` on the quadric.  For a class
``beta`` we write ``delta(beta)`` for its anticanonical degree minus one;
this is the number of generic point constraints for the genus-zero count
and one more than the number used by the genus-two count.

Surfaces and classes are immutable values; all operations are pure.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InvalidClass, RankMismatch, RankOverflow
from .numerics import to_integer

__all__ = ["Surface", "CurveClass", "MAX_BLOWUPS", "quadric_to_blowup_class"]

MAX_BLOWUPS = 8

_BLOWUP = "blp2"
_QUADRIC = "p1xp1"

_DESCRIPTOR_RE = re.compile(r"^blp2:k=([0-8])$")


@dataclass(frozen=True)
class CurveClass:
    """An integer coefficient vector in the basis described above."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise InvalidClass("curve class needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def parse(cls, text: str) -> CurveClass:
        """Parse comma-separated integers, e.g. ``"4,2,2"``."""
        parts = [p.strip() for p in text.split(",")]
        try:
            coeffs = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidClass(f"cannot parse curve class {text!r}") from None
        return cls(coeffs)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: CurveClass) -> CurveClass:
        if len(self.coeffs) != len(other.coeffs):
            raise RankMismatch("cannot add classes of different rank")
        return CurveClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CurveClass) -> CurveClass:
        if len(self.coeffs) != len(other.coeffs):
            raise RankMismatch("cannot subtract classes of different rank")
        return CurveClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


@dataclass(frozen=True)
class Surface:
    """A del Pezzo surface: ``blp2`` with ``k`` points, or the quadric."""

    model: str
    k: int = 0

    def __post_init__(self) -> None:
        if self.model == _BLOWUP:
            if not 0 <= self.k <= MAX_BLOWUPS:
                raise RankOverflow(f"blow-up count must be 0..{MAX_BLOWUPS}, got {self.k}")
        elif self.model == _QUADRIC:
            if self.k != 0:
                raise InvalidClass("the quadric has no blow-up points")
        else:
            raise InvalidClass(f"unknown surface model {self.model!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def blowup(cls, k: int) -> Surface:
        """The plane blown up at ``k`` general points (``k = 0`` is the plane)."""
        return cls(_BLOWUP, k)

    @classmethod
    def quadric(cls) -> Surface:
        return cls(_QUADRIC)

    @classmethod
    def parse(cls, descriptor: str) -> Surface:
        """Parse a descriptor string: ``"blp2:k=<0..8>"`` or ``"p1xp1"``."""
        if descriptor == _QUADRIC:
            return cls.quadric()
        m = _DESCRIPTOR_RE.match(descriptor)
        if m:
            return cls.blowup(int(m.group(1)))
        raise InvalidClass(f"unknown surface descriptor {descriptor!r}")

    # -- basic data --------------------------------------------------------

    @property
    def is_blowup(self) -> bool:
        return self.model == _BLOWUP

    @property
    def is_quadric(self) -> bool:
        return self.model == _QUADRIC

    @property
    def descriptor(self) -> str:
        return f"{_BLOWUP}:k={self.k}" if self.is_blowup else _QUADRIC

    @property
    def rank(self) -> int:
        """Length of coefficient vectors: ``k + 1`` on blow-ups, 2 on the quadric."""
        return self.k + 1 if self.is_blowup else 2

    @property
    def b2(self) -> int:
        return self.rank

    @property
    def euler_number(self) -> int:
        return 3 + self.k if self.is_blowup else 4

    @property
    def k_squared(self) -> int:
        """Self-intersection of the anticanonical class: ``9 - k`` or 8."""
        return 9 - self.k if self.is_blowup else 8

    @property
    def anticanonical(self) -> CurveClass:
        if self.is_blowup:
            return CurveClass((3,) + (1,) * self.k)
        return CurveClass((2, 2))

    # -- class operations --------------------------------------------------

    def check_class(self, beta: CurveClass, allow_zero: bool = False) -> None:
        if len(beta.coeffs) != self.rank:
            raise RankMismatch(
                f"class {beta} has rank {len(beta.coeffs)}, surface {self.descriptor} "
                f"needs {self.rank}"
            )
        if beta.is_zero and not allow_zero:
            raise InvalidClass("the zero class is not a curve class")

    def intersect(self, beta1: CurveClass, beta2: CurveClass) -> int:
        self.check_class(beta1, allow_zero=True)
        self.check_class(beta2, allow_zero=True)
        if self.is_blowup:
            d1, d2 = beta1.coeffs[0], beta2.coeffs[0]
            return d1 * d2 - sum(m1 * m2 for m1, m2 in zip(beta1.coeffs[1:], beta2.coeffs[1:]))
        a1, b1 = beta1.coeffs
        a2, b2 = beta2.coeffs
        return a1 * b2 + a2 * b1

    def self_intersection(self, beta: CurveClass) -> int:
        return self.intersect(beta, beta)

    def anticanonical_degree(self, beta: CurveClass) -> int:
        self.check_class(beta)
        return self.intersect(self.anticanonical, beta)

    def delta(self, beta: CurveClass) -> int:
        """Anticanonical degree minus one."""
        return self.anticanonical_degree(beta) - 1

    def genus(self, beta: CurveClass) -> int:
        """Arithmetic genus ``(beta^2 - x1.beta + 2) / 2`` of a smooth member."""
        self.check_class(beta)
        numerator = self.self_intersection(beta) - self.anticanonical_degree(beta) + 2
        return to_integer(Fraction(numerator, 2), context=f"genus of {beta}")

    def append_coefficient(self, beta: CurveClass, sigma: int) -> tuple[Surface, CurveClass]:
        """Blow up one more point and extend ``beta`` by ``m_{k+1} = -sigma``.

        ``sigma = -1`` makes the curve pass through the new point once
        (coefficient 1); ``sigma = 0`` puts the new point off the curve.
        Either way the curve count is unchanged, which is what the
        consistency checks exercise.  Returns the enlarged surface together
        with the extended class.
        """
        if not self.is_blowup:
            raise InvalidClass("can only append coefficients on blow-up surfaces")
        if sigma not in (-1, 0):
            raise InvalidClass(f"appended coefficient must come from sigma in {{-1, 0}}, got {sigma}")
        if self.k >= MAX_BLOWUPS:
            raise RankOverflow(f"cannot blow up more than {MAX_BLOWUPS} points")
        self.check_class(beta)
        bigger = Surface.blowup(self.k + 1)
        return bigger, CurveClass(beta.coeffs + (-sigma,))

    # -- splittings --------------------------------------------------------

    def _is_exceptional_type(self, beta: CurveClass) -> bool:
        coeffs = beta.coeffs
        return (
            coeffs[0] == 0
            and sum(1 for m in coeffs[1:] if m == -1) == 1
            and all(m in (0, -1) for m in coeffs[1:])
        )

    def _admissible_part(self, beta: CurveClass) -> bool:
        # A part of a splitting can only carry curves if it is some E_i or
        # has positive line degree; everything else contributes zero.
        if self.is_quadric:
            return True
        return beta.coeffs[0] >= 1 or self._is_exceptional_type(beta)

    def splittings(self, beta: CurveClass) -> Iterator[tuple[CurveClass, CurveClass]]:
        """All ordered pairs ``(beta1, beta2)`` with ``beta1 + beta2 = beta``.

        Both parts are nonzero and drawn from a finite candidate box that
        provably contains every class with a nonzero genus-zero count
        (irreducible rational curves have ``0 <= m_i <= d`` except for the
        exceptional classes themselves).  Callers discard the remaining
        pairs by multiplying with vanishing counts.
        """
        self.check_class(beta)
        if self.is_quadric:
            a, b = beta.coeffs
            for a1 in range(0, a + 1):
                for b1 in range(0, b + 1):
                    beta1 = CurveClass((a1, b1))
                    beta2 = CurveClass((a - a1, b - b1))
                    if beta1.is_zero or beta2.is_zero:
                        continue
                    yield beta1, beta2
            return
        d = beta.coeffs[0]
        ms = beta.coeffs[1:]
        for d1 in range(0, d + 1):
            ranges: list[Iterable[int]] = [
                [-1] + list(range(0, max(d1, m + 1) + 1)) for m in ms
            ]
            for m1s in itertools.product(*ranges):
                beta1 = CurveClass((d1,) + m1s)
                if beta1.is_zero:
                    continue
                beta2 = beta - beta1
                if beta2.is_zero:
                    continue
                if self._admissible_part(beta1) and self._admissible_part(beta2):
                    yield beta1, beta2


def quadric_to_blowup_class(beta: CurveClass) -> CurveClass:
    """Transport a quadric bidegree to the two-point blow-up of the plane.

    The quadric and the plane blown up at two points share a common
    blow-up, under which ``e_1 -> L - E_2`` and ``e_2 -> L - E_1``; hence
    ``(a, b) -> (a + b)L - bE_1 - aE_2``, i.e. the vector ``(a+b, b, a)``.
    The map preserves the intersection pairing and the anticanonical degree,
    which makes it an independent cross-check of the two engines.
    """
    if len(beta.coeffs) != 2:
        raise RankMismatch("expected a quadric bidegree (a, b)")
    a, b = beta.coeffs
    return CurveClass((a + b, b, a))
