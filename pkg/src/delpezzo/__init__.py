"""Exact curve counts on del Pezzo surfaces.

Genus-zero counts of rational curves on the plane blown up at up to 8
general points and on the quadric P1 x P1, computed by an associativity
recursion over exact integers, together with the genus-two
fixed-complex-structure counts built on top of them (symplectic sums,
cuspidal counts, two-component counts, tautological intersections, and
the reconciliation of the pieces).

Quick start::

    >>> from delpezzo import Surface, CurveClass, n0, n2j_main
    >>> n0(Surface.blowup(2), CurveClass((3, 1, 1)))
    12
    >>> n2j_main(Surface.blowup(0), CurveClass((4,)))
    14400

Coefficient convention: ``CurveClass((d, m1, ..., mk))`` is the class of
degree ``d`` with multiplicity ``m_i`` at the i-th blown-up point (that
is, d*L - m1*E_1 - ... - mk*E_k); a quadric class is a bidegree (a, b).
"""

from .checks import CheckResult, run_suite
from .errors import (
    CacheFormatError,
    DelPezzoError,
    InvalidClass,
    NegativeCount,
    NonIntegralResult,
    RankMismatch,
    RankOverflow,
    RecursionFailure,
    SurfaceMismatch,
)
from .genus0 import (
    GwTable,
    load_cache,
    n0,
    save_cache,
    support_enumerate,
    support_pairs,
)
from .genus2 import (
    Genus2Report,
    ReconcileReport,
    applicability_warnings,
    cusp_count,
    genus2_report,
    n2j_main,
    plane_genus2_intermediate,
    plane_genus2_zinger,
    reconcile,
    rt2,
    taut_intersection,
    two_component_count,
)
from .surface import MAX_BLOWUPS, CurveClass, Surface, quadric_to_blowup_class

__version__ = "0.1.0"

__all__ = [
    "CacheFormatError",
    "CheckResult",
    "CurveClass",
    "DelPezzoError",
    "Genus2Report",
    "GwTable",
    "InvalidClass",
    "MAX_BLOWUPS",
    "NegativeCount",
    "NonIntegralResult",
    "RankMismatch",
    "RankOverflow",
    "ReconcileReport",
    "RecursionFailure",
    "Surface",
    "SurfaceMismatch",
    "applicability_warnings",
    "cusp_count",
    "genus2_report",
    "load_cache",
    "n0",
    "n2j_main",
    "plane_genus2_intermediate",
    "plane_genus2_zinger",
    "quadric_to_blowup_class",
    "reconcile",
    "rt2",
    "run_suite",
    "save_cache",
    "support_enumerate",
    "support_pairs",
    "taut_intersection",
    "two_component_count",
    "__version__",
]
