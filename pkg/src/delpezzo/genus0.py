"""Genus-zero curve counts by recursion.

The engine computes the number ``n0(beta)`` of irreducible rational curves
in a class ``beta`` through ``delta(beta)`` generic points.

On the plane it evaluates the classical closed recursion

    n_d = sum_{d1+d2=d} C(3d-2, 3d1-1) d1 d2 n_{d1} n_{d2}
          (d1 d2 - 2 (d1-d2)^2 / (3d-2)) / (6 (d-1)),       n_1 = 1.

Everywhere else it uses coefficient identities of the genus-zero
point-insertion potential: associativity of the quantum product (WDVV)
contracted with two divisors and two point classes, three divisors and one
point, or four divisors.  Writing ``delta_i`` for ``delta(beta_i)`` and
``C`` for the binomial, the three relations are, for divisors A, B, C, D
and sums over ordered splittings ``beta = beta1 + beta2`` into nonzero
parts:

  [two points]   (A.B) n(beta) =
      sum n1 n2 (b1.b2) [ (b1.A)(b2.B) C(delta-3, delta1-1)
                          - (b1.A)(b1.B) C(delta-3, delta1) ]

  [one point]    ((A.B)(beta.C) - (A.C)(beta.B)) n(beta) =
      sum C(delta-2, delta1) n1 n2 (b1.b2) (b1.A)
          [ (b1.C)(b2.B) - (b1.B)(b2.C) ]

  [no points]    ((A.B)(beta.C)(beta.D) + (C.D)(beta.A)(beta.B)
                  - (A.C)(beta.B)(beta.D) - (B.D)(beta.A)(beta.C)) n(beta) =
      sum C(delta-1, delta1) n1 n2 (b1.b2)
          [ (b1.A)(b1.C)(b2.B)(b2.D) - (b1.A)(b1.B)(b2.C)(b2.D) ]

On blow-ups the engine picks (A, B) = (L, L) when delta >= 3, the triple
(E_1, L, E_1) when delta = 2 (leading coefficient d), and (E_i, E_j, E_i,
E_j) at the two largest multiplicities when delta = 1 (leading coefficient
m_i^2 + m_j^2 > 0).  On the quadric (A, B) = (e_1, e_2) always works
because bidegrees with a, b >= 1 have delta >= 3.  Classes the relations
cannot reach (delta = 0, degree >= 2, every multiplicity >= 2) are pushed
through the quadratic Cremona transformation based at the three largest
multiplicities, which strictly lowers the degree.  Before any of that, a
class with a multiplicity 0 or 1 loses that coefficient: forgetting a
blown-up point off the curve, or trading a point of multiplicity one for a
generic point constraint, leaves the count unchanged and shrinks the
lattice.

Splitting sums run over per-degree support lists (classes with nonzero
count, built in order of anticanonical degree), which keeps the recursion
polynomial instead of scanning the whole candidate box each time.  All
divisions are exact and asserted; a failed division or a stalled reduction
raises RecursionFailure instead of returning a wrong number.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from pathlib import Path
from typing import Iterator

from .errors import (
    CacheFormatError,
    InvalidClass,
    RecursionFailure,
    SurfaceMismatch,
)
from .numerics import binomial, to_integer
from .surface import CurveClass, Surface

__all__ = [
    "GwTable",
    "n0",
    "support_enumerate",
    "support_pairs",
    "load_cache",
    "save_cache",
    "CACHE_VERSION",
]

CACHE_VERSION = 1

Coeffs = tuple[int, ...]


class _BlowupComputer:
    """Counts on every blow-up of the plane at once.

    Memo keys are raw coefficient tuples; the tuple length encodes the
    surface (length k+1 on k points), so the coefficient-dropping
    reductions can reuse one memo across ranks.
    """

    def __init__(self, seed: dict[Coeffs, int] | None = None) -> None:
        self.memo: dict[Coeffs, int] = dict(seed or {})
        # (k, anticanonical degree) -> [(coeffs, count), ...], nonzero only
        self.support: dict[tuple[int, int], list[tuple[Coeffs, int]]] = {}
        self.ensured: dict[int, int] = {}

    # -- public ------------------------------------------------------------

    def value(self, c: Coeffs) -> int:
        cached = self.memo.get(c)
        if cached is not None:
            return cached
        result = self._compute(c)
        self.memo[c] = result
        return result

    def pairs(self, c: Coeffs) -> Iterator[tuple[Coeffs, int, Coeffs, int]]:
        """Ordered splittings of ``c`` into two classes with nonzero counts."""
        k = len(c) - 1
        degree = self._degree(c)
        self.ensure(k, degree - 1)
        for d1 in range(1, degree):
            for c1, n1 in self.support[(k, d1)]:
                c2 = tuple(a - b for a, b in zip(c, c1))
                n2 = self.value(c2)
                if n2:
                    yield c1, n1, c2, n2

    def ensure(self, k: int, bound: int) -> None:
        """Fill the support lists of rank ``k`` up to anticanonical degree ``bound``."""
        done = self.ensured.get(k, 0)
        for degree in range(done + 1, bound + 1):
            rows = [
                (cand, v)
                for cand in self._candidates(k, degree)
                if (v := self.value(cand))
            ]
            self.support[(k, degree)] = rows
            self.ensured[k] = degree

    # -- helpers -----------------------------------------------------------

    @staticmethod
    def _degree(c: Coeffs) -> int:
        return 3 * c[0] - sum(c[1:])

    @staticmethod
    def _dot(c1: Coeffs, c2: Coeffs) -> int:
        return c1[0] * c2[0] - sum(m1 * m2 for m1, m2 in zip(c1[1:], c2[1:]))

    def _candidates(self, k: int, degree: int) -> list[Coeffs]:
        """Classes of the given anticanonical degree that can carry curves.

        These are the exceptional classes (degree 1) and the vectors with
        d >= 1, 0 <= m_i <= d and nonnegative genus, i.e.
        sum m_i (m_i - 1) <= (d-1)(d-2).  The degree bound on d comes from
        combining the genus bound with Cauchy-Schwarz on sum m_i.
        """
        out: list[Coeffs] = []
        if k == 0:
            if degree % 3 == 0 and degree >= 3:
                out.append((degree // 3,))
            return out
        if degree == 1:
            for i in range(k):
                out.append((0,) + tuple(-1 if j == i else 0 for j in range(k)))
        disc = 9 * degree * degree - (9 - k) * (degree * degree + k * degree - 2 * k)
        if disc < 0:
            return out
        d_lo = max(1, (degree + 2) // 3)
        d_hi = (3 * degree + isqrt(disc)) // (9 - k)
        for d in range(d_lo, d_hi + 1):
            target = 3 * d - degree
            if target < 0 or target > k * d:
                continue
            cap = (d - 1) * (d - 2)
            for ms in self._multiplicities(target, k, d, cap):
                out.append((d,) + ms)
        return out

    def _multiplicities(
        self, total: int, slots: int, hi: int, cap: int
    ) -> Iterator[Coeffs]:
        """Tuples of ``slots`` values in [0, hi] summing to ``total`` with
        sum m(m-1) <= cap."""
        if slots == 0:
            if total == 0:
                yield ()
            return
        lo = max(0, total - (slots - 1) * hi)
        for m in range(lo, min(hi, total) + 1):
            used = m * (m - 1)
            if used > cap:
                break
            for rest in self._multiplicities(total - m, slots - 1, hi, cap - used):
                yield (m,) + rest

    # -- the reduction pipeline ---------------------------------------------

    def _compute(self, c: Coeffs) -> int:
        if len(c) == 1:
            return self._plane(c[0])
        d, ms = c[0], c[1:]
        if d < 0:
            return 0
        if d == 0:
            exceptional = all(m in (0, -1) for m in ms) and ms.count(-1) == 1
            return 1 if exceptional else 0
        if any(m < 0 for m in ms) or any(m > d for m in ms):
            return 0
        delta = self._degree(c) - 1
        if delta < 0:
            return 0
        if d == 1:
            # A line through at most two of the blown-up points is unique.
            return 1
        if delta == 0 and d * d - sum(m * m for m in ms) == -1:
            # Rigid class of self-intersection -1: one curve, no constraints.
            return 1
        for i, m in enumerate(ms):
            if m in (0, 1):
                return self.value((d,) + ms[:i] + ms[i + 1 :])
        if delta >= 3:
            return self._two_point_relation(c, delta)
        if delta == 2:
            return self._one_point_relation(c, delta)
        if delta == 1:
            return self._four_divisor_relation(c, delta)
        return self._cremona(c)

    def _plane(self, d: int) -> int:
        if d < 1:
            return 0
        if d == 1:
            return 1
        total = Fraction(0)
        for d1 in range(1, d):
            d2 = d - d1
            weight = comb(3 * d - 2, 3 * d1 - 1) * d1 * d2
            bracket = d1 * d2 - Fraction(2 * (d1 - d2) ** 2, 3 * d - 2)
            total += weight * self.value((d1,)) * self.value((d2,)) * bracket
        return to_integer(total / (6 * (d - 1)), context=f"plane degree {d}")

    def _two_point_relation(self, c: Coeffs, delta: int) -> int:
        # (A, B) = (L, L); leading coefficient L.L = 1.
        total = 0
        for c1, n1, c2, n2 in self.pairs(c):
            dot = self._dot(c1, c2)
            if dot == 0:
                continue
            d1, d2 = c1[0], c2[0]
            delta1 = self._degree(c1) - 1
            total += (
                n1
                * n2
                * dot
                * (
                    d1 * d2 * binomial(delta - 3, delta1 - 1)
                    - d1 * d1 * binomial(delta - 3, delta1)
                )
            )
        return total

    def _one_point_relation(self, c: Coeffs, delta: int) -> int:
        # (A, B, C) = (E_1, L, E_1); leading coefficient
        # (E1.L)(beta.E1) - (E1.E1)(beta.L) = d.
        d = c[0]
        total = 0
        for c1, n1, c2, n2 in self.pairs(c):
            dot = self._dot(c1, c2)
            if dot == 0:
                continue
            m1a, m1b = c1[1], c2[1]  # beta_i . E_1
            delta1 = self._degree(c1) - 1
            total += (
                binomial(delta - 2, delta1)
                * n1
                * n2
                * dot
                * m1a
                * (m1a * c2[0] - c1[0] * m1b)
            )
        quotient, remainder = divmod(total, d)
        if remainder:
            raise RecursionFailure(f"one-point relation left remainder at {c}")
        return quotient

    def _four_divisor_relation(self, c: Coeffs, delta: int) -> int:
        # (A, B, C, D) = (E_i, E_j, E_i, E_j) at the two largest
        # multiplicities; leading coefficient m_i^2 + m_j^2.
        ms = c[1:]
        if len(ms) < 2:
            raise RecursionFailure(f"four-divisor relation needs two points at {c}")
        i = max(range(len(ms)), key=lambda t: ms[t])
        j = max((t for t in range(len(ms)) if t != i), key=lambda t: ms[t])
        kappa = ms[i] ** 2 + ms[j] ** 2
        if kappa == 0:
            raise RecursionFailure(f"four-divisor relation degenerates at {c}")
        total = 0
        for c1, n1, c2, n2 in self.pairs(c):
            dot = self._dot(c1, c2)
            if dot == 0:
                continue
            pi1, pj1 = c1[1 + i], c1[1 + j]  # beta_1 . E_i, beta_1 . E_j
            pi2, pj2 = c2[1 + i], c2[1 + j]
            delta1 = self._degree(c1) - 1
            total += (
                binomial(delta - 1, delta1)
                * n1
                * n2
                * dot
                * (pi1 * pi1 * pj2 * pj2 - pi1 * pj1 * pi2 * pj2)
            )
        quotient, remainder = divmod(total, kappa)
        if remainder:
            raise RecursionFailure(f"four-divisor relation left remainder at {c}")
        return quotient

    def _cremona(self, c: Coeffs) -> int:
        # Quadratic transformation based at the three points of largest
        # multiplicity; the counts are invariant under it.
        d, ms = c[0], list(c[1:])
        if len(ms) < 3:
            raise RecursionFailure(f"no reduction applies to {c}")
        order = sorted(range(len(ms)), key=lambda t: ms[t], reverse=True)
        a, b, e = order[:3]
        if ms[a] + ms[b] + ms[e] <= d:
            raise RecursionFailure(f"quadratic transformation stalls on {c}")
        image = list(ms)
        image[a] = d - ms[b] - ms[e]
        image[b] = d - ms[a] - ms[e]
        image[e] = d - ms[a] - ms[b]
        new_d = 2 * d - ms[a] - ms[b] - ms[e]
        return self.value((new_d, *image))


class _QuadricComputer:
    """Counts on the quadric; bidegree tuples (a, b)."""

    def __init__(self, seed: dict[Coeffs, int] | None = None) -> None:
        self.memo: dict[Coeffs, int] = dict(seed or {})
        self.support: dict[int, list[tuple[Coeffs, int]]] = {}
        self.ensured = 0

    def value(self, c: Coeffs) -> int:
        cached = self.memo.get(c)
        if cached is not None:
            return cached
        result = self._compute(c)
        self.memo[c] = result
        return result

    def pairs(self, c: Coeffs) -> Iterator[tuple[Coeffs, int, Coeffs, int]]:
        degree = 2 * (c[0] + c[1])
        self.ensure(degree - 1)
        for d1 in range(1, degree):
            for c1, n1 in self.support[d1]:
                c2 = (c[0] - c1[0], c[1] - c1[1])
                n2 = self.value(c2)
                if n2:
                    yield c1, n1, c2, n2

    def ensure(self, bound: int) -> None:
        for degree in range(self.ensured + 1, bound + 1):
            rows = [
                (cand, v)
                for cand in self._candidates(degree)
                if (v := self.value(cand))
            ]
            self.support[degree] = rows
            self.ensured = degree

    @staticmethod
    def _candidates(degree: int) -> list[Coeffs]:
        if degree == 2:
            return [(0, 1), (1, 0)]
        if degree % 2 or degree < 4:
            return []
        half = degree // 2
        return [(a, half - a) for a in range(1, half)]

    def _compute(self, c: Coeffs) -> int:
        a, b = c
        if a < 0 or b < 0:
            return 0
        if (a, b) in ((1, 0), (0, 1)):
            return 1
        if a == 0 or b == 0:
            # Multiple covers of a ruling never pass through enough points.
            return 0
        # (A, B) = (e_1, e_2); leading coefficient e_1.e_2 = 1.  Note
        # beta.e_1 = b and beta.e_2 = a.
        delta = 2 * a + 2 * b - 1
        total = 0
        for c1, n1, c2, n2 in self.pairs(c):
            dot = c1[0] * c2[1] + c2[0] * c1[1]
            if dot == 0:
                continue
            delta1 = 2 * (c1[0] + c1[1]) - 1
            total += (
                n1
                * n2
                * dot
                * (
                    c1[1] * c2[0] * binomial(delta - 3, delta1 - 1)
                    - c1[1] * c1[0] * binomial(delta - 3, delta1)
                )
            )
        return total


_SHARED_BLOWUP = _BlowupComputer()
_SHARED_QUADRIC = _QuadricComputer()


@dataclass
class GwTable:
    """A persistent memo of genus-zero counts for one surface.

    ``entries`` holds the nonzero counts discovered so far; zero results
    are implicit.  Tables round-trip through the JSON cache files.
    """

    surface: Surface
    entries: dict[CurveClass, int] = field(default_factory=dict)
    version: int = CACHE_VERSION

    def _computer(self):
        comp = self.__dict__.get("_comp")
        if comp is None:
            seed = {cls.coeffs: value for cls, value in self.entries.items()}
            comp = (
                _BlowupComputer(seed)
                if self.surface.is_blowup
                else _QuadricComputer(seed)
            )
            self.__dict__["_comp"] = comp
        return comp

    def _harvest(self) -> None:
        """Pull every nonzero count of the right rank out of the memo."""
        comp = self.__dict__.get("_comp")
        if comp is None:
            return
        rank = self.surface.rank
        for coeffs, value in comp.memo.items():
            if value and len(coeffs) == rank:
                self.entries[CurveClass(coeffs)] = value


def _resolve(surface: Surface, table: GwTable | None):
    if table is None:
        return _SHARED_BLOWUP if surface.is_blowup else _SHARED_QUADRIC
    if table.surface != surface:
        raise SurfaceMismatch(
            f"table belongs to {table.surface.descriptor}, not {surface.descriptor}"
        )
    return table._computer()


def n0(surface: Surface, beta: CurveClass, table: GwTable | None = None) -> int:
    """Number of irreducible rational curves in ``beta`` through
    ``delta(beta)`` generic points."""
    surface.check_class(beta)
    comp = _resolve(surface, table)
    value = comp.value(beta.coeffs)
    if table is not None:
        table._harvest()
    return value


def support_pairs(
    surface: Surface, beta: CurveClass, table: GwTable | None = None
) -> Iterator[tuple[CurveClass, int, CurveClass, int]]:
    """Ordered splittings ``beta = beta1 + beta2`` with both counts nonzero.

    Yields ``(beta1, n0(beta1), beta2, n0(beta2))``.  This is the sum range
    shared by every splitting formula downstream: terms outside it vanish.
    """
    surface.check_class(beta)
    comp = _resolve(surface, table)
    for c1, n1, c2, n2 in comp.pairs(beta.coeffs):
        yield CurveClass(c1), n1, CurveClass(c2), n2
    if table is not None:
        table._harvest()


def support_enumerate(
    surface: Surface, max_anticanonical_degree: int, table: GwTable | None = None
) -> list[tuple[CurveClass, int]]:
    """All classes with nonzero count and anticanonical degree up to the
    bound, sorted lexicographically by coefficient vector."""
    if max_anticanonical_degree < 1:
        raise InvalidClass("the anticanonical degree bound must be at least 1")
    comp = _resolve(surface, table)
    rows: list[tuple[CurveClass, int]] = []
    if surface.is_blowup:
        comp.ensure(surface.k, max_anticanonical_degree)
        for degree in range(1, max_anticanonical_degree + 1):
            rows.extend(
                (CurveClass(c), v) for c, v in comp.support[(surface.k, degree)]
            )
    else:
        comp.ensure(max_anticanonical_degree)
        for degree in range(1, max_anticanonical_degree + 1):
            rows.extend((CurveClass(c), v) for c, v in comp.support[degree])
    if table is not None:
        table._harvest()
    rows.sort(key=lambda row: row[0].coeffs)
    return rows


# ---------------------------------------------------------------------------
# Cache files: versioned JSON with counts as decimal strings, e.g.
# {"version":1,"surface":"blp2:k=2","entries":[{"class":[3,1,1],"n0":"12"}]}
# Serialization is canonical (sorted entries, fixed separators) so that
# save -> load -> save reproduces the file byte for byte.


def save_cache(table: GwTable, path: str | Path) -> None:
    rows = sorted(table.entries.items(), key=lambda item: item[0].coeffs)
    document = {
        "version": table.version,
        "surface": table.surface.descriptor,
        "entries": [
            {"class": list(cls.coeffs), "n0": str(value)} for cls, value in rows
        ],
    }
    Path(path).write_text(json.dumps(document, separators=(",", ":")) + "\n")


def load_cache(path: str | Path) -> GwTable:
    try:
        document = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"cache file {path} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise CacheFormatError(f"cache file {path} must hold a JSON object")
    for key in ("version", "surface", "entries"):
        if key not in document:
            raise CacheFormatError(f"cache file {path} lacks the {key!r} field")
    if document["version"] != CACHE_VERSION:
        raise CacheFormatError(
            f"cache file {path} has version {document['version']!r}, "
            f"expected {CACHE_VERSION}"
        )
    try:
        surface = Surface.parse(document["surface"])
    except (InvalidClass, TypeError) as exc:
        raise CacheFormatError(f"cache file {path}: {exc}") from exc
    entries: dict[CurveClass, int] = {}
    rows = document["entries"]
    if not isinstance(rows, list):
        raise CacheFormatError(f"cache file {path}: entries must be a list")
    for row in rows:
        if not isinstance(row, dict) or "class" not in row or "n0" not in row:
            raise CacheFormatError(f"cache file {path}: malformed entry {row!r}")
        vector = row["class"]
        if not isinstance(vector, list) or not all(
            isinstance(c, int) and not isinstance(c, bool) for c in vector
        ):
            raise CacheFormatError(f"cache file {path}: bad class vector {vector!r}")
        if len(vector) != surface.rank:
            raise SurfaceMismatch(
                f"cache file {path}: class {vector} does not fit "
                f"{surface.descriptor}"
            )
        raw = row["n0"]
        if not isinstance(raw, str):
            raise CacheFormatError(f"cache file {path}: counts must be strings")
        try:
            value = int(raw)
        except ValueError:
            raise CacheFormatError(
                f"cache file {path}: bad decimal string {raw!r}"
            ) from None
        entries[CurveClass(tuple(vector))] = value
    return GwTable(surface=surface, entries=entries)
