"""Projective singular locus, local equations, and Plücker sums."""

from __future__ import annotations

import pytest

from curveinv.algebra import parse_poly
from curveinv.errors import (
    NotHomogeneous,
    PositiveDimensionalSingularLocus,
    ReducibleCurve,
)
from curveinv.field import FieldCtx
from curveinv.projective import (
    dehomogenize,
    local_equation,
    plucker_analysis,
    singular_points,
)

QQ = FieldCtx.rationals()
XYZ = ("x", "y", "z")


def proj(text, ctx=QQ):
    return parse_poly(text, ctx, XYZ)


NODAL = "z*y^2-x^3-x^2*z"
CUSPIDAL = "z*y^2-x^3"


def test_nodal_cubic_singular_locus():
    F = proj(NODAL)
    pts = singular_points(F)
    assert len(pts) == 1
    (pt,) = pts
    assert pt.chart == "z"
    assert [c.is_zero() for c in pt.coords] == [True, True, False]
    assert pt.local_eq == parse_poly("y^2-x^3-x^2", pt.local_eq.ctx)
    rep = pt.report
    assert (rep.mt, rep.r, rep.delta) == (2, 2, 1)
    assert int(rep.kappa) == 2


def test_cuspidal_cubic_singular_locus():
    F = proj(CUSPIDAL)
    pts = singular_points(F)
    assert len(pts) == 1
    rep = pts[0].report
    assert (rep.mt, rep.r, rep.delta) == (2, 1, 1)
    assert int(rep.kappa) == 3


def test_smooth_conic_has_no_singular_points():
    assert singular_points(proj("x^2+y*z")) == []


def test_plucker_products_char0():
    # classical classes: 3*2-2 for the node, 3*2-3 for the cusp, 2 for a conic
    nodal = plucker_analysis(proj(NODAL))
    assert (nodal.d, nodal.s, nodal.product) == (3, 1, 4)
    assert nodal.kappa_sum == 2 and nodal.delta_sum == 1
    assert nodal.m_good_global and nodal.big_p
    assert all(v == "pass" for v in nodal.relations.values())

    cusp = plucker_analysis(proj(CUSPIDAL))
    assert (cusp.s, cusp.product, cusp.kappa_sum) == (1, 3, 3)
    assert all(v == "pass" for v in cusp.relations.values())

    conic = plucker_analysis(proj("x^2+y*z"))
    assert (conic.s, conic.product) == (0, 2)
    assert conic.m_good_global and conic.big_p
    assert conic.swan_sum == 0 and conic.mu_sum.to_json() == 0


def test_plucker_products_large_char():
    F11 = FieldCtx.prime(11)
    assert plucker_analysis(proj(NODAL, F11)).product == 4
    cusp = plucker_analysis(proj(CUSPIDAL, F11))
    assert cusp.product == 3
    assert cusp.big_p and cusp.relations["tame_swan"] == "pass"
    assert plucker_analysis(proj("x^2+y*z", F11)).product == 2


def test_chart_independence_of_local_reports():
    # the same cusp placed at (0:0:1) and, after permuting coordinates,
    # at (1:0:0); the local reports must agree
    at_z = singular_points(proj(CUSPIDAL))[0]
    at_x = singular_points(proj("x*z^2-y^3"))[0]
    assert at_x.chart == "x"
    a, b = at_z.report, at_x.report
    assert (a.mt, a.r, a.delta, a.gamma_tilde) == (b.mt, b.r, b.delta, b.gamma_tilde)
    assert a.kappa == b.kappa and a.mu == b.mu


def test_local_equation_accepts_unnormalized_coordinates():
    F = proj(NODAL)
    two = QQ.from_int(2)
    local = local_equation(F, (QQ.zero, QQ.zero, two))
    assert local == parse_poly("y^2-x^3-x^2", QQ)


def test_dehomogenize_charts():
    F = proj(NODAL)
    assert dehomogenize(F, "z") == parse_poly("y^2-x^3-x^2", QQ)
    # x chart: surviving variables (y, z) become the local (x, y)
    assert dehomogenize(F, "x") == parse_poly("y*x^2-1-y", QQ)


def test_fermat_quintic_char5_is_rejected_as_nonreduced():
    F5 = FieldCtx.prime(5)
    F = proj("x^5+y^5+z^5", F5)
    with pytest.raises(PositiveDimensionalSingularLocus):
        singular_points(F)
    with pytest.raises(PositiveDimensionalSingularLocus):
        plucker_analysis(F)


def test_nonhomogeneous_and_wrong_arity_rejected():
    with pytest.raises(NotHomogeneous):
        singular_points(proj("x^2+y"))
    with pytest.raises(NotHomogeneous):
        singular_points(parse_poly("x^2+y^2", QQ))
    with pytest.raises(NotHomogeneous):
        plucker_analysis(proj("0"))


def test_visible_splits_rejected():
    with pytest.raises(ReducibleCurve):
        plucker_analysis(proj("x^3+x*y*z"))  # divisible by x
    with pytest.raises(ReducibleCurve):
        plucker_analysis(proj("x^2+y^2"))  # binary form of degree 2 splits
    with pytest.raises(ReducibleCurve):
        plucker_analysis(proj("x*y*z"))


def test_genus_bound_rejects_conic_pair():
    # (x^2+yz)(y^2+xz): four nodes, but an irreducible quartic carries at
    # most (4-1)(4-2)/2 = 3 delta
    F = proj("(x^2+y*z)*(y^2+x*z)")
    with pytest.raises(ReducibleCurve):
        plucker_analysis(F)


def test_assume_irreducible_allows_line_triple():
    rep = plucker_analysis(proj("x*y*z"), assume_irreducible=True)
    assert (rep.s, rep.delta_sum, rep.kappa_sum, rep.product) == (3, 3, 6, 0)
    assert rep.mt_sum == 6 and rep.r_sum == 6
    assert all(v == "pass" for v in rep.relations.values())


def test_singular_points_in_extension():
    # three lines: y = 0 and x = ±sqrt(2) z, meeting pairwise in three
    # points, two of which need the quadratic extension
    F = proj("y*(x^2-2*z^2)")
    pts = singular_points(F, analyze=False)
    assert len(pts) == 3
    ctxs = {p.coords[0].ctx for p in pts}
    assert len(ctxs) == 1
    at_infinity = [p for p in pts if p.coords[2].is_zero()]
    assert len(at_infinity) == 1
    finite = [p for p in pts if not p.coords[2].is_zero()]
    for p in finite:
        a = p.coords[0]
        assert a * a == a.ctx.from_int(2)
        assert p.report is None


def test_plucker_json_shape():
    rep = plucker_analysis(proj(NODAL))
    js = rep.to_json()
    assert list(js) == [
        "char", "field", "poly", "d", "s", "delta", "mu", "mt", "r",
        "swan", "kappa", "product", "m_good", "big_p", "points", "relations",
    ]
    assert js["char"] == 0 and js["d"] == 3 and js["product"] == 4
    assert js["points"][0]["point"] == "(0:0:1)"
    assert js["points"][0]["local"]["delta"] == 1
