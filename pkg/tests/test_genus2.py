"""Genus-two invariant tests.

All expected values below were evaluated by hand from the closed formulas
(with the genus-zero inputs 1, 1, 12, 620 frozen in test_genus0) before the
module was written.  Worked examples, plane degree 3: the tautological
number is 9/9*12 - (1/18)(21*2*3*6 + 21*2*6*3) = 12 - 84 = -72; the cusp
count is (3-1)*12 + 0 = 24; the two-component count is (21*2 + 21*2)/2 = 42;
the symplectic sum is 6*12*9 + 2*21*4*2 = 984.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from delpezzo.errors import InvalidClass
from delpezzo.genus0 import n0, support_pairs
from delpezzo.genus2 import (
    applicability_warnings,
    cr_components,
    cr_total,
    cusp_count,
    encode_exact,
    genus2_report,
    n2j_main,
    plane_genus2_intermediate,
    plane_genus2_zinger,
    reconcile,
    rt2,
    taut_intersection,
    two_component_count,
)
from delpezzo.numerics import binomial
from delpezzo.surface import CurveClass, Surface

PLANE = Surface.blowup(0)
QUADRIC = Surface.quadric()


def plane_class(d: int) -> CurveClass:
    return CurveClass((d,))


# ---------------------------------------------------------------------------
# Frozen plane fixtures.


@pytest.mark.parametrize("d, expected", [(1, 6), (2, 30), (3, 984)])
def test_rt2_plane(d, expected):
    assert rt2(PLANE, plane_class(d)) == expected


@pytest.mark.parametrize(
    "d, expected",
    [(1, Fraction(3)), (2, Fraction(-3)), (3, Fraction(-72))],
)
def test_taut_plane(d, expected):
    assert taut_intersection(PLANE, plane_class(d)) == expected


@pytest.mark.parametrize("d, expected", [(1, 0), (2, 0), (3, 24)])
def test_cusp_plane(d, expected):
    assert cusp_count(PLANE, plane_class(d)) == expected


@pytest.mark.parametrize("d, expected", [(1, 0), (2, 3), (3, 42)])
def test_two_component_plane(d, expected):
    assert two_component_count(PLANE, plane_class(d)) == expected


@pytest.mark.parametrize(
    "d, lemma, proof",
    [
        (1, Fraction(6), Fraction(18)),
        (2, Fraction(-6), Fraction(6)),
        (3, Fraction(-144), Fraction(0)),
    ],
)
def test_single_sphere_component_variants(d, lemma, proof):
    beta = plane_class(d)
    assert cr_components(PLANE, beta, variant="lemma").n11 == lemma
    assert cr_components(PLANE, beta, variant="proof").n11 == proof


@pytest.mark.parametrize(
    "d, lemma_total, proof_total",
    [
        (1, Fraction(6), Fraction(18)),
        (2, Fraction(6), Fraction(18)),
        (3, Fraction(552), Fraction(696)),
    ],
)
def test_correction_totals(d, lemma_total, proof_total):
    beta = plane_class(d)
    assert cr_total(PLANE, beta, variant="lemma") == lemma_total
    assert cr_total(PLANE, beta, variant="proof") == proof_total


def test_correction_components_shape():
    comps = cr_components(PLANE, plane_class(3))
    assert comps.n21x2 == 4 * 24
    assert comps.n31x18 == 18 * 24
    assert comps.n12 == 4 * 42
    assert comps.total == comps.n11 + 22 * 24 + 4 * 42


@pytest.mark.parametrize("d, expected", [(2, 0), (3, 0), (4, 14400)])
def test_n2j_plane(d, expected):
    assert n2j_main(PLANE, plane_class(d)) == expected


def test_n2j_scales_with_automorphism_order():
    assert n2j_main(PLANE, plane_class(4), aut_order=4) == 7200


def test_aut_order_must_be_even_and_positive():
    for bad in (0, -2, 1, 3):
        with pytest.raises(InvalidClass):
            n2j_main(PLANE, plane_class(4), aut_order=bad)


def test_delta_zero_classes_rejected():
    surface = Surface.blowup(1)
    exceptional = CurveClass((0, -1))
    for fn in (rt2, taut_intersection, cusp_count, two_component_count):
        with pytest.raises(InvalidClass):
            fn(surface, exceptional)
    with pytest.raises(InvalidClass):
        n2j_main(surface, exceptional)


# ---------------------------------------------------------------------------
# The two plane closed forms and the lattice formula agree.


def test_plane_closed_forms_match_main_formula():
    for d in range(2, 9):
        direct = n2j_main(PLANE, plane_class(d))
        assert plane_genus2_intermediate(d) == direct
        assert plane_genus2_zinger(d) == direct


def test_plane_intermediate_degree_one():
    assert plane_genus2_intermediate(1) == 0


def test_plane_closed_form_rejects_degree_one():
    with pytest.raises(InvalidClass):
        plane_genus2_zinger(1)


# ---------------------------------------------------------------------------
# Vanishing on low-genus classes and hypothesis warnings.


def test_quadric_bidegree_two_two_vanishes_with_warnings():
    beta = CurveClass((2, 2))
    assert n2j_main(QUADRIC, beta) == 0
    warnings = applicability_warnings(QUADRIC, beta)
    assert len(warnings) == 2


@pytest.mark.parametrize(
    "k, coeffs",
    [(1, (1, 1)), (1, (2, 1)), (1, (3, 1)), (2, (4, 2, 2))],
)
def test_blowup_vanishing_examples(k, coeffs):
    surface = Surface.blowup(k)
    beta = CurveClass(coeffs)
    assert surface.genus(beta) <= 1
    assert n2j_main(surface, beta) == 0


def test_applicability_plane():
    assert applicability_warnings(PLANE, plane_class(4)) == []
    assert any("d > 2" in w for w in applicability_warnings(PLANE, plane_class(2)))
    # 3L has d > 2 but an empty residual system.
    assert any("beta - 3L" in w for w in applicability_warnings(PLANE, plane_class(3)))


def test_applicability_quadric_partial():
    assert applicability_warnings(QUADRIC, CurveClass((3, 3))) == []
    warnings = applicability_warnings(QUADRIC, CurveClass((2, 3)))
    assert len(warnings) == 1 and "a > 2" in warnings[0]


def test_applicability_blowup_with_residual():
    # 6L - E1 - E2: d > 2 and the residual 3L - E1 - E2 still moves.
    surface = Surface.blowup(2)
    assert applicability_warnings(surface, CurveClass((6, 1, 1))) == []
    # ... while 6L - 2E1 - 2E2 leaves a residual of negative genus.
    assert len(applicability_warnings(surface, CurveClass((6, 2, 2)))) == 1


# ---------------------------------------------------------------------------
# Reconciliation regression pin (report-only upstream, asserted here as a
# fixture: the mismatch itself is the documented fact).


def test_reconcile_plane_conic_pin():
    report = reconcile(PLANE, plane_class(2))
    assert report.rt2 == 30
    assert report.cr_lemma == 6
    assert report.cr_proof == 18
    assert report.aut_n2j == 0
    assert report.residual_lemma == 24
    assert report.residual_proof == 12


def test_reconcile_aut_product_is_order_independent():
    base = reconcile(PLANE, plane_class(4), aut_order=2)
    scaled = reconcile(PLANE, plane_class(4), aut_order=4)
    assert base.aut_n2j == scaled.aut_n2j == 2 * 14400


def test_reconcile_plane_line():
    report = reconcile(PLANE, plane_class(1))
    assert report.rt2 == 6
    assert report.cr_lemma == 6
    assert report.aut_n2j == 0


# ---------------------------------------------------------------------------
# Reports and serialization.


def test_genus2_report_bundle():
    report = genus2_report(PLANE, plane_class(3))
    assert report.n0 == 12
    assert report.rt2 == 984
    assert report.cusp == 24
    assert report.two_comp == 42
    assert report.taut == Fraction(-72)
    assert report.n2j == 0
    assert report.genus == 1
    assert report.delta == 8

    payload = report.to_json_dict()
    assert payload["class"] == [3]
    assert payload["n2j"] == "0"
    assert payload["rt2"] == "984"
    assert payload["taut"] == {"num": "-72", "den": "1"}
    assert isinstance(payload["warnings"], list)


def test_encode_exact():
    assert encode_exact(12) == "12"
    assert encode_exact(Fraction(-3, 2)) == {"num": "-3", "den": "2"}


# ---------------------------------------------------------------------------
# Structural properties of the splitting sums.


def sum_term_table(surface, beta):
    """Independent transcription of each summand, keyed by the ordered pair."""
    delta = surface.delta(beta)
    deg = surface.anticanonical_degree(beta)
    table = {}
    for b1, c1, b2, c2 in support_pairs(surface, beta):
        w = binomial(delta - 1, surface.delta(b1))
        dot = surface.intersect(b1, b2)
        deg1 = surface.anticanonical_degree(b1)
        deg2 = surface.anticanonical_degree(b2)
        sq1 = surface.self_intersection(b1)
        sq2 = surface.self_intersection(b2)
        table[(b1.coeffs, b2.coeffs)] = {
            "rt2": w * sq1 * sq2 * dot * c1 * c2,
            "taut": Fraction(w * c1 * c2 * dot * deg1 * deg2, 2 * deg),
            "cusp": w * c1 * c2 * dot * (Fraction(deg1 * deg2, 2 * deg) - 1),
            "two": Fraction(w * c1 * c2 * dot, 2),
            "n2j": w
            * c1
            * c2
            * dot
            * (-Fraction(6 * deg1 * deg2, deg) + Fraction(sq1 * sq2, 2) + 10),
        }
    return table


@pytest.mark.parametrize(
    "surface, coeffs",
    [
        (PLANE, (4,)),
        (Surface.blowup(2), (4, 2, 2)),
        (Surface.blowup(3), (4, 2, 2, 2)),
        (QUADRIC, (2, 2)),
        (QUADRIC, (3, 2)),
    ],
)
def test_splitting_sums_are_termwise_swap_symmetric(surface, coeffs):
    beta = CurveClass(coeffs)
    table = sum_term_table(surface, beta)
    assert table, f"no splittings found for {beta}"
    for (a, b), terms in table.items():
        mirrored = table[(b, a)]
        for key, value in terms.items():
            assert mirrored[key] == value


def test_integrality_small_sweep():
    cases = [
        (PLANE, plane_class(d)) for d in range(1, 7)
    ] + [
        (Surface.blowup(2), CurveClass((d, m1, m2)))
        for d in range(1, 5)
        for m1 in range(0, d + 1)
        for m2 in range(0, m1 + 1)
        if 3 * d - m1 - m2 - 1 >= 1
    ] + [
        (QUADRIC, CurveClass((a, b)))
        for a in range(1, 4)
        for b in range(1, 4)
    ]
    for surface, beta in cases:
        if n0(surface, beta) == 0:
            continue
        n2j_main(surface, beta)  # raises NonIntegralResult on failure
        cusp_count(surface, beta)  # also checks nonnegativity
        two_component_count(surface, beta)
