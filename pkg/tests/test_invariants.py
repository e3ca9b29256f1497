"""Local invariants: intersection numbers, mu, delta, kappa, gammas, relations."""

from __future__ import annotations

import random

import pytest

from curveinv.algebra import MPoly, parse_poly, squarefree_part
from curveinv.errors import NotReduced, UndefinedAtOrigin
from curveinv.field import FieldCtx
from curveinv.invariants import (
    INF,
    ExtNat,
    GammaBudget,
    analyze_local,
    delta,
    gamma,
    gamma_tilde,
    intersection_multiplicity,
    is_im_good,
    is_m_good,
    kappa,
    milnor,
    swan,
    verify_relations,
)

QQ = FieldCtx.rationals()
F2 = FieldCtx.prime(2)
F3 = FieldCtx.prime(3)
XY = ("x", "y")


def q(text):
    return parse_poly(text, QQ)


def test_extnat_arithmetic():
    assert ExtNat(3) + 4 == 7
    assert (INF + 5) == INF
    assert INF > ExtNat(10**9)
    assert ExtNat(7) - 2 == 5
    assert (INF - 3) == INF
    with pytest.raises(ValueError):
        ExtNat(3) - INF
    assert INF.to_json() == "inf"
    assert ExtNat(6).to_json() == 6


def test_intersection_basics():
    assert intersection_multiplicity(q("x"), q("y")) == 1
    assert intersection_multiplicity(q("y^2-x^3"), q("y^2+x^3")) == 6
    assert intersection_multiplicity(q("x"), q("x+x*y")) == INF
    assert intersection_multiplicity(q("x*y"), q("x+y")) == 2
    # unit second argument
    assert intersection_multiplicity(q("x"), q("1+y")) == 0
    with pytest.raises(UndefinedAtOrigin):
        intersection_multiplicity(q("1+x"), q("y"))


def test_intersection_symmetry_random():
    rng = random.Random(0x15EC)
    pairs = 0
    while pairs < 25:
        ctx = rng.choice([QQ, F3, FieldCtx.prime(5)])
        fs = []
        for _ in range(2):
            terms = {}
            for _ in range(3):
                e = (rng.randint(0, 3), rng.randint(0, 3))
                if e != (0, 0):
                    terms[e] = ctx.sample(rng)
            fs.append(MPoly(ctx, XY, terms))
        f, g = fs
        if f.is_zero() or g.is_zero():
            continue
        if not (f.constant_term().is_zero() and g.constant_term().is_zero()):
            continue
        assert intersection_multiplicity(f, g) == intersection_multiplicity(g, f)
        pairs += 1


def test_intersection_weights_nonreduced_first_argument():
    # i(x^2, y) counts the axis twice
    assert intersection_multiplicity(q("x^2"), q("y")) == 2


def test_milnor_values():
    assert milnor(q("x*y")) == 1
    assert milnor(q("y^2-x^3")) == 2
    assert milnor(parse_poly("y^2+x^3", F2)) == INF
    assert milnor(parse_poly("y^2+x^3", F3)) == INF
    assert milnor(q("y-x^2")) == 0
    with pytest.raises(NotReduced):
        milnor(q("(y-x)^2"))


def test_delta_values():
    assert delta(q("x*y")) == 1
    assert delta(q("y^2-x^3")) == 1
    assert delta(parse_poly("y^2+x^3", F2)) == 1
    assert delta(q("(y^2-x^3)*(y^2+x^3)")) == 8
    assert delta(q("(y^2-x^3)*(y-x)")) == 3


def test_kappa_values():
    assert kappa(q("x*y")) == 2
    assert kappa(parse_poly("y^2+x^3", F2)) == 4
    assert kappa(parse_poly("y^2+x^3", F3)) == 3
    assert kappa(q("y^2-x^3")) == 3


def test_gamma_tilde_axes_and_node():
    assert gamma_tilde(q("x")) == 0
    assert gamma_tilde(q("y")) == 0
    assert gamma_tilde(q("x*y")) == 1


def test_gamma_tilde_values():
    assert gamma_tilde(q("y^2-x^3")) == 2
    assert gamma_tilde(q("x*(y^2-x^3)")) == 5
    assert gamma_tilde(parse_poly("x^3+x^4+y^5", F3)) == 8
    assert gamma_tilde(parse_poly("(x+y)^3+(x+y)^4+y^5", F3)) == 10


def test_gamma_tilde_unit_factor_is_invisible():
    assert gamma_tilde(q("(1+x)*(y^2-x^3)")) == 2
    assert gamma_tilde(q("x*(1+y)")) == 0


def test_swan_values():
    assert swan(q("y^2-x^3")) == 0
    assert swan(parse_poly("x*y", F2)) == 0
    assert swan(parse_poly("y^2+x^3", F2)) is None
    # mu = i(x^3, 2y^4) = 12 while 2*delta - r + 1 = 8: wild, Swan 4
    assert swan(parse_poly("x^3+x^4+y^5", F3)) == 4


def test_goodness_predicates():
    f2c = parse_poly("y^2+x^3", F2)
    assert not is_m_good(f2c)
    assert is_im_good(f2c)
    assert is_m_good(parse_poly("y^2+x^3", F3))
    assert is_m_good(q("(y^2-x^3)*(y^2+x^3)"))
    assert is_im_good(q("x*y"))
    # ix = 5 alone does not break im-goodness: iy = 3 rescues the branch
    f5 = parse_poly("x^3+x^4+y^5", FieldCtx.prime(5))
    assert is_im_good(f5)
    # single branch (t^4, t^6+t^7): both contact orders even
    wild = parse_poly("y^4+x^6+x^7", F2)
    assert not is_im_good(wild)


def test_gamma_exact_cases():
    g = gamma(q("y^2-x^3"))
    assert g.kind == "exact" and g.value == 2 and g.certified

    g = gamma(parse_poly("x^3+x^4+y^5", F3))
    assert g.kind == "exact" and g.value == 8
    # the certificate determines delta = 4 here
    assert delta(parse_poly("x^3+x^4+y^5", F3)) == 4

    g = gamma(parse_poly("y^2+x^3", F2))
    assert g.kind == "exact" and g.value == 2


def test_gamma_sheared_pair_still_exact():
    # the diagonal form needs a coordinate change before the floor is reached
    f = parse_poly("(x+y)^3+(x+y)^4+y^5", F3)
    assert gamma_tilde(f) == 10
    g = gamma(f)
    assert g.kind == "exact" and g.value == 8
    assert g.witness is not None and g.witness.label != "identity"


def test_gamma_interval_never_contradicts_floor():
    rng = random.Random(0x9A77A)
    done = 0
    while done < 8:
        ctx = rng.choice([F2, F3])
        terms = {}
        for _ in range(4):
            e = (rng.randint(0, 4), rng.randint(0, 4))
            if e != (0, 0):
                terms[e] = ctx.sample(rng)
        f = MPoly(ctx, XY, terms)
        if f.is_zero() or f.order() is None or f.order() < 2 or f.degree() > 5:
            continue
        if not squarefree_part(f)[1]:
            continue
        res = gamma(f, GammaBudget(linear_tries=2, smooth_tries=2))
        floor = res.safe_lower
        if res.kind == "exact":
            assert res.value == floor
        else:
            assert res.lower == floor + 1
            assert res.upper >= res.lower
            assert gamma_tilde(f) >= res.upper
        done += 1


def test_coordinate_change_inverse_check():
    from curveinv.invariants import CoordinateChange

    x = MPoly.variable(QQ, XY, "x")
    y = MPoly.variable(QQ, XY, "y")
    ch = CoordinateChange(x + y * y, y - x * x, truncation=4)
    u, v = ch.truncated_inverse()
    assert u.terms[(1, 0)] == QQ.one
    with pytest.raises(ValueError):
        CoordinateChange(x + y, x + y, truncation=3)


def test_relations_named_curves():
    rels = verify_relations(parse_poly("y^2+x^3", F2))
    assert rels["R4"] == "pass"
    assert rels["R2"] == "pass"
    assert "fail" not in rels.values()

    rels = verify_relations(parse_poly("x^3+x^4+y^5", F3))
    assert "fail" not in rels.values()

    rels = verify_relations(q("(y^2-x^3)*(y^2+x^3)"))
    assert "fail" not in rels.values()
    assert rels["R9"] == "skip"

    rels = verify_relations(q("y^2-x^3"))
    assert rels["R9"] == "pass"
    assert "fail" not in rels.values()


def test_relations_char0_random():
    rng = random.Random(0xC0)
    done = 0
    while done < 6:
        terms = {}
        for _ in range(4):
            e = (rng.randint(0, 3), rng.randint(0, 3))
            if e != (0, 0):
                terms[e] = QQ.sample(rng)
        f = MPoly(QQ, XY, terms)
        if f.is_zero() or f.order() is None or f.order() < 1 or f.degree() > 5:
            continue
        if not squarefree_part(f)[1]:
            continue
        rels = verify_relations(f)
        assert "fail" not in rels.values()
        done += 1


def test_report_shape_and_values():
    rep = analyze_local(parse_poly("y^2+x^3", F2))
    data = rep.to_json()
    assert list(data.keys()) == [
        "char",
        "field",
        "poly",
        "mt",
        "r",
        "delta",
        "mu",
        "kappa",
        "gamma_tilde",
        "gamma",
        "swan",
        "m_good",
        "im_good",
        "right_im_good",
        "relations",
    ]
    assert data["char"] == 2
    assert data["mu"] == "inf"
    assert data["kappa"] == 4
    assert data["swan"] == "undefined"
    assert data["m_good"] is False
    assert data["right_im_good"] == "yes"


def test_report_char0_baseline():
    rep = analyze_local(q("x*y"))
    assert rep.mu == 1 and rep.delta == 1 and rep.r == 2 and rep.kappa == 2
    assert rep.swan == 0
    assert rep.gamma.kind == "exact" and rep.gamma.value == 1
    assert rep.right_im_good == "yes"


def test_report_smooth_point():
    rep = analyze_local(q("y-x^2"))
    assert rep.mt == 1 and rep.r == 1
    assert rep.mu == 0 and rep.delta == 0 and rep.kappa == 0
    assert rep.swan == 0
    assert rep.gamma_tilde == 0
