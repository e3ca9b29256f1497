"""Cross-checks: the brute-force oracles against the branch-based invariants."""

from __future__ import annotations

import random

import pytest

from curveinv.algebra import MPoly, parse_poly, squarefree_part
from curveinv.errors import NotReduced, ShearExhausted, UndefinedAtOrigin
from curveinv.field import FieldCtx
from curveinv.invariants import INF, delta, intersection_multiplicity
from curveinv.oracle import (
    branch_semigroup,
    delta_semigroup,
    dual_degree_elim,
    i_resultant,
)
from curveinv.projective import plucker_analysis

QQ = FieldCtx.rationals()
F3 = FieldCtx.prime(3)
XY = ("x", "y")
XYZ = ("x", "y", "z")


def q(text):
    return parse_poly(text, QQ)


def proj(text, ctx=QQ):
    return parse_poly(text, ctx, XYZ)


# -- intersection numbers -------------------------------------------------------


def test_i_resultant_frozen_values():
    assert i_resultant(q("x"), q("y")) == 1
    assert i_resultant(q("y^2-x^3"), q("y^2+x^3")) == 6
    assert i_resultant(q("x"), q("x*(1+y)")) == INF


def test_i_resultant_edge_conventions():
    assert i_resultant(q("x"), q("1+y")) == 0
    assert i_resultant(q("y^2-x^3"), MPoly.zero(QQ, XY)) == INF
    with pytest.raises(UndefinedAtOrigin):
        i_resultant(q("1+x"), q("y"))


def test_i_resultant_tangential_and_tiny_field():
    # tangent smooth branches, and a char-2 pair that forces field enlargement
    assert i_resultant(q("y-x^2"), q("y+x^2")) == 2
    F2 = FieldCtx.prime(2)
    f = parse_poly("y^2+y*x+x^3", F2)
    g = parse_poly("y+x^2", F2)
    assert i_resultant(f, g) == intersection_multiplicity(f, g)


def test_i_resultant_matches_main_on_random_pairs():
    rng = random.Random(0x0AC1E)
    done = 0
    skipped = 0
    while done < 40:
        ctx = rng.choice([QQ, F3, FieldCtx.prime(2), FieldCtx.prime(5)])
        fs = []
        for _ in range(2):
            terms = {}
            for _ in range(4):
                e = (rng.randint(0, 3), rng.randint(0, 3))
                if e != (0, 0):
                    terms[e] = ctx.sample(rng)
            fs.append(MPoly(ctx, XY, terms))
        f, g = fs
        if f.is_zero() or not f.constant_term().is_zero():
            continue
        if not g.constant_term().is_zero():
            continue
        try:
            got = i_resultant(f, g, seed=done)
        except ShearExhausted:
            skipped += 1
            done += 1
            continue
        assert got == intersection_multiplicity(f, g)
        done += 1
    assert skipped <= done // 10


# -- delta by gap counting ------------------------------------------------------


def test_delta_semigroup_frozen_values():
    assert delta_semigroup(q("y^2-x^3")) == 1
    assert delta_semigroup(q("x*y")) == 1
    assert delta_semigroup(q("(y^2-x^3)*(y-x)")) == 3


def test_delta_semigroup_rejects_non_reduced():
    with pytest.raises(NotReduced):
        delta_semigroup(q("x^2"))
    with pytest.raises(NotReduced):
        delta_semigroup(MPoly.zero(QQ, XY))


def test_branch_semigroup_cusp():
    data = branch_semigroup(q("y^2-x^3"))
    assert data.conductor == 2
    assert data.gaps == 1
    assert 1 not in data.values
    assert {0, 2, 3, 4}.issubset(data.values)


def test_branch_semigroup_values_closed_under_addition():
    for text in ("y^2-x^3", "y^3-x^4", "y^2-x^5"):
        data = branch_semigroup(q(text))
        top = max(data.values)
        for v in data.values:
            for w in data.values:
                if v + w <= top:
                    assert v + w in data.values
        # every order past the conductor is realized
        assert all(n in data.values for n in range(data.conductor, top + 1))
        assert data.gaps == len([n for n in range(data.conductor) if n not in data.values])


def test_branch_semigroup_wants_one_branch():
    with pytest.raises(ValueError):
        branch_semigroup(q("x*y"))


def test_delta_semigroup_matches_main_random():
    rng = random.Random(0xDE17A)
    done = 0
    while done < 12:
        ctx = rng.choice([QQ, F3])
        terms = {}
        for _ in range(4):
            e = (rng.randint(0, 3), rng.randint(0, 3))
            if e != (0, 0):
                terms[e] = ctx.sample(rng)
        f = MPoly(ctx, XY, terms)
        if f.is_zero() or f.order() is None or f.order() < 1:
            continue
        if not squarefree_part(f)[1]:
            continue
        assert delta_semigroup(f) == delta(f)
        done += 1


# -- dual degree by elimination -------------------------------------------------


def test_dual_degree_frozen_values_char0():
    assert dual_degree_elim(proj("z*y^2-x^3-x^2*z")) == 4
    assert dual_degree_elim(proj("z*y^2-x^3")) == 3
    assert dual_degree_elim(proj("x^2+y*z")) == 2


def test_dual_degree_frozen_values_char11():
    F11 = FieldCtx.prime(11)
    assert dual_degree_elim(proj("z*y^2-x^3-x^2*z", F11)) == 4
    assert dual_degree_elim(proj("z*y^2-x^3", F11)) == 3
    assert dual_degree_elim(proj("x^2+y*z", F11)) == 2


def test_dual_degree_line_triangle():
    # three concurrent-free lines: every tangent count is swallowed by the nodes
    assert dual_degree_elim(proj("x*y*z")) == 0


def test_dual_degree_matches_plucker_on_quartic():
    # a cusp in the chart and a two-branch contact point at infinity
    F = proj("y^2*z^2-x^4-x^3*z", FieldCtx.prime(101))
    rep = plucker_analysis(F)
    assert rep.product == 5
    assert dual_degree_elim(F) == 5


def test_dual_degree_preconditions():
    with pytest.raises(ValueError):
        dual_degree_elim(proj("x^5+y^5+x*y^3*z"))
    with pytest.raises(ValueError):
        dual_degree_elim(proj("z*y^2-x^3-x^2*z", F3))
    with pytest.raises(ValueError):
        dual_degree_elim(proj("x+y+z"))
