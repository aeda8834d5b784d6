"""Executable consistency checks.

Each check either asserts a value the theory pins down (status ``pass`` /
``fail``) or reports a diagnostic the artifact deliberately refuses to
assert (status ``report-only``).  The suite builds its own tables and never
reads cache files, so a damaged cache can never change its verdict.

Check groups:

* ``genus0-classical-plane`` — the engine against the frozen classical
  plane table 1, 1, 12, 620, 87304.
* ``genus0-cross-model`` — quadric counts against the two-point blow-up
  through the shared-lattice embedding, computed by independent recursions.
* ``genus2-blow-down-4L`` — the quartic count is unchanged when a point is
  blown up off the curve or on it with multiplicity one.
* ``sweep-*`` — integrality of every genus-two quantity and termwise swap
  symmetry of every splitting sum over a lattice sweep.
* ``vanish-*`` — the fixed-complex-structure count vanishes on classes
  whose members have genus at most one.
* ``zinger-plane`` — the lattice formula, its plane specialization, and
  the closed form agree for all degrees up to 12.
* ``reconcile-plane-conic`` — report-only: the bookkeeping residuals on
  the plane conic class, pinned but never asserted to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DelPezzoError
from .genus0 import GwTable, n0, support_enumerate, support_pairs
from .genus2 import (
    n2j_main,
    plane_genus2_intermediate,
    plane_genus2_zinger,
    reconcile,
)
from .numerics import binomial
from .surface import CurveClass, Surface, quadric_to_blowup_class

__all__ = ["CheckResult", "run_suite", "render_text", "SCOPES"]

SCOPES = ("all", "plane", "blowups", "quadric")

PLANE_TABLE = (1, 1, 12, 620, 87304)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail" | "report-only"
    expected: str
    actual: str
    justification: str

    def to_json_dict(self) -> dict[str, str]:
        return {
            "checkId": self.check_id,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "justification": self.justification,
        }


def _verdict(check_id, expected, actual, justification) -> CheckResult:
    status = "pass" if expected == actual else "fail"
    return CheckResult(check_id, status, str(expected), str(actual), justification)


# ---------------------------------------------------------------------------
# Individual checks.  Every function builds its own fresh tables.


def _check_plane_classical() -> list[CheckResult]:
    plane = Surface.blowup(0)
    table = GwTable(surface=plane)
    actual = tuple(n0(plane, CurveClass((d,)), table) for d in range(1, 6))
    return [
        _verdict(
            "genus0-classical-plane",
            str(PLANE_TABLE),
            str(actual),
            "rational plane curves of degree 1..5 through 3d-1 points; the"
            " classical values are frozen from an independent evaluation of"
            " the degree recursion",
        )
    ]


def _check_zinger() -> list[CheckResult]:
    plane = Surface.blowup(0)
    table = GwTable(surface=plane)
    mismatches = []
    for d in range(2, 13):
        direct = n2j_main(plane, CurveClass((d,)), table)
        forms = (plane_genus2_intermediate(d, table), plane_genus2_zinger(d, table))
        if forms != (direct, direct):
            mismatches.append((d, direct, forms))
    return [
        _verdict(
            "zinger-plane",
            "agreement for d = 2..12",
            "agreement for d = 2..12" if not mismatches else f"mismatch at {mismatches}",
            "the lattice formula specialized to the plane and Zinger's"
            " closed form are algebraically equal once the genus-zero"
            " recursion is substituted",
        )
    ]


def _check_cross_model() -> list[CheckResult]:
    quadric = Surface.quadric()
    two_points = Surface.blowup(2)
    q_table = GwTable(surface=quadric)
    b_table = GwTable(surface=two_points)
    bad = []
    for a in range(0, 7):
        for b in range(0, 7 - a):
            if a + b == 0:
                continue
            beta = CurveClass((a, b))
            left = n0(quadric, beta, q_table)
            right = n0(two_points, quadric_to_blowup_class(beta), b_table)
            if left != right:
                bad.append(((a, b), left, right))
    return [
        _verdict(
            "genus0-cross-model",
            "agreement for a+b <= 6",
            "agreement for a+b <= 6" if not bad else f"mismatch at {bad}",
            "the bidegree lattice embeds into the two-point blow-up lattice"
            " preserving intersections and anticanonical degrees, so the two"
            " independent recursions must count the same curves",
        )
    ]


def _check_blow_down() -> list[CheckResult]:
    plane = Surface.blowup(0)
    quartic = CurveClass((4,))
    base = n2j_main(plane, quartic)
    one_point = Surface.blowup(1)
    off_curve = n2j_main(one_point, CurveClass((4, 0)))
    through_point = n2j_main(one_point, CurveClass((4, 1)))
    return [
        _verdict(
            "genus2-blow-down-4L",
            f"({base}, {base})",
            f"({off_curve}, {through_point})",
            "blowing up a point off the curve, or on it with multiplicity"
            " one, is a bijection on the counted genus-two quartics",
        )
    ]


_VANISH_BLOWUPS = (
    # (k, coefficient vector): members have genus <= 1.
    (1, (1, 0)),
    (1, (2, 0)),
    (1, (3, 0)),
    (1, (1, 1)),
    (1, (2, 1)),
    (1, (3, 1)),
    (2, (4, 2, 2)),
    (3, (4, 2, 2, 2)),
)


def _check_vanish_blowups() -> list[CheckResult]:
    results = []
    tables = {}
    for k, coeffs in _VANISH_BLOWUPS:
        surface = Surface.blowup(k)
        table = tables.setdefault(k, GwTable(surface=surface))
        beta = CurveClass(coeffs)
        value = n2j_main(surface, beta, table)
        results.append(
            _verdict(
                f"vanish-blowup-k{k}-{beta}",
                "0",
                str(value),
                "no immersed genus-two curve exists in a class of genus at"
                " most one, so the count must vanish even where the"
                " derivation's positivity hypotheses fail",
            )
        )
    return results


def _quadric_vanish_classes():
    for a in range(1, 6):
        yield (a, 0)
        yield (a, 1)
    yield (2, 2)


def _check_vanish_quadric() -> list[CheckResult]:
    quadric = Surface.quadric()
    table = GwTable(surface=quadric)
    results = []
    for coeffs in _quadric_vanish_classes():
        beta = CurveClass(coeffs)
        value = n2j_main(quadric, beta, table)
        results.append(
            _verdict(
                f"vanish-quadric-{beta}",
                "0",
                str(value),
                "bidegrees (a,0), (a,1) and (2,2) only contain curves of"
                " genus at most one, so the genus-two count must vanish",
            )
        )
    return results


def _sweep_classes(scope: str):
    if scope == "plane":
        plane = Surface.blowup(0)
        table = GwTable(surface=plane)
        for d in range(1, 9):
            yield plane, CurveClass((d,)), table
        return
    if scope == "blowups":
        for k in (1, 2, 3):
            surface = Surface.blowup(k)
            table = GwTable(surface=surface)
            for beta, _ in support_enumerate(surface, 12, table):
                if surface.delta(beta) >= 1:
                    yield surface, beta, table
        return
    quadric = Surface.quadric()
    table = GwTable(surface=quadric)
    for a in range(0, 6):
        for b in range(0, 6):
            beta_coeffs = (a, b)
            if a + b == 0:
                continue
            beta = CurveClass(beta_coeffs)
            if n0(quadric, beta, table) != 0 and quadric.delta(beta) >= 1:
                yield quadric, beta, table


def _swap_symmetric(surface, beta, table) -> bool:
    delta = surface.delta(beta)
    deg = surface.anticanonical_degree(beta)
    terms = {}
    for b1, c1, b2, c2 in support_pairs(surface, beta, table):
        weight = binomial(delta - 1, surface.delta(b1))
        dot = surface.intersect(b1, b2)
        deg1 = surface.anticanonical_degree(b1)
        deg2 = surface.anticanonical_degree(b2)
        sq1 = surface.self_intersection(b1)
        sq2 = surface.self_intersection(b2)
        terms[(b1.coeffs, b2.coeffs)] = (
            weight * sq1 * sq2 * dot * c1 * c2,
            Fraction(weight * c1 * c2 * dot * deg1 * deg2, 2 * deg),
            Fraction(weight * c1 * c2 * dot, 2),
            weight
            * c1
            * c2
            * dot
            * (-Fraction(6 * deg1 * deg2, deg) + Fraction(sq1 * sq2, 2) + 10),
        )
    return all(terms[(a, b)] == terms[(b, a)] for (a, b) in terms)


def _check_sweep(scope: str) -> list[CheckResult]:
    from .genus2 import cusp_count, two_component_count

    problems = []
    examined = 0
    for surface, beta, table in _sweep_classes(scope):
        examined += 1
        try:
            n2j_main(surface, beta, table)
            cusp_count(surface, beta, table)
            two_component_count(surface, beta, table)
        except DelPezzoError as exc:
            problems.append(f"{surface.descriptor}:{beta}: {exc}")
            continue
        if not _swap_symmetric(surface, beta, table):
            problems.append(f"{surface.descriptor}:{beta}: asymmetric summand")
    return [
        _verdict(
            f"sweep-{scope}",
            "0 violations",
            "0 violations" if not problems else f"{len(problems)} violations: {problems[:3]}",
            "every genus-two quantity must come out an integer (all exact"
            " divisions clear) and every splitting summand must be invariant"
            f" under swapping the parts ({examined} classes examined)",
        )
    ]


def _check_reconcile_pin() -> list[CheckResult]:
    plane = Surface.blowup(0)
    report = reconcile(plane, CurveClass((2,)))
    actual = (
        report.rt2,
        report.cr_lemma,
        report.cr_proof,
        report.aut_n2j,
        report.residual_lemma,
        report.residual_proof,
    )
    return [
        CheckResult(
            "reconcile-plane-conic",
            "report-only",
            "(30, 6, 18, 0, 24, 12)",
            str(tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in actual)),
            "the symplectic sum, the two correction-term variants, and the"
            " main count do not balance on the conic class; the residuals"
            " are reported as data, not asserted to vanish",
        )
    ]


# ---------------------------------------------------------------------------
# Suite driver.

_CHECKS_BY_SCOPE = {
    "plane": (
        _check_plane_classical,
        _check_zinger,
        lambda: _check_sweep("plane"),
        _check_reconcile_pin,
    ),
    "blowups": (
        _check_blow_down,
        _check_vanish_blowups,
        lambda: _check_sweep("blowups"),
    ),
    "quadric": (
        _check_cross_model,
        _check_vanish_quadric,
        lambda: _check_sweep("quadric"),
    ),
}


def run_suite(scope: str = "all") -> list[CheckResult]:
    """Run the consistency checks for the given scope, ordered by check id."""
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    selected = ("plane", "blowups", "quadric") if scope == "all" else (scope,)
    results: list[CheckResult] = []
    for name in selected:
        for check in _CHECKS_BY_SCOPE[name]:
            results.extend(check())
    results.sort(key=lambda result: result.check_id)
    return results


def render_text(results: list[CheckResult]) -> str:
    """Human-readable table, one line per check plus a summary line."""
    width = max(len(result.check_id) for result in results) if results else 0
    lines = [
        f"{result.status.upper():11} {result.check_id:{width}}  "
        f"expected {result.expected}  actual {result.actual}"
        for result in results
    ]
    failed = sum(1 for result in results if result.status == "fail")
    passed = sum(1 for result in results if result.status == "pass")
    noted = sum(1 for result in results if result.status == "report-only")
    lines.append(
        f"{passed} passed, {failed} failed, {noted} report-only, {len(results)} total"
    )
    return "\n".join(lines)
