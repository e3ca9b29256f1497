"""Dense univariate polynomials over a :class:`~curveinv.field.FieldCtx`.

Beyond ring arithmetic this module carries the machinery the rest of the
package leans on: squarefree decomposition in every characteristic (Yun in
characteristic zero, Musser with p-th root extraction otherwise), full
factorization (distinct-degree plus Cantor-Zassenhaus over finite fields,
sympy over QQ, Trager's norm descent over algebraic extensions of QQ), and
canonical root lists.  Randomized splitting draws from a generator seeded by
the input, so every run factors the same polynomial the same way.
"""

from __future__ import annotations

import random
from fractions import Fraction
from hashlib import sha256

from .errors import DivisionByZero, IncompatibleContexts
from .field import (
    FieldCtx,
    FieldElement,
    _rp_divmod,
    _rp_gcd,
    _rp_mul,
    _rp_pow_mod,
    _rp_trim,
    embed,
)


def _seeded_rng(*parts: str) -> random.Random:
    digest = sha256("|".join(parts).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


class UniPoly:
    """Immutable univariate polynomial; ``coeffs`` constant term first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        elems = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.ctx is not ctx:
                    raise IncompatibleContexts("coefficient from another context")
                elems.append(c)
            elif isinstance(c, int):
                elems.append(ctx.from_int(c))
            elif isinstance(c, Fraction):
                elems.append(ctx.from_fraction(c))
            else:
                raise TypeError(f"bad coefficient {c!r}")
        while elems and elems[-1].is_zero():
            elems.pop()
        self.ctx = ctx
        self.coeffs = tuple(elems)

    @staticmethod
    def x(ctx: FieldCtx) -> "UniPoly":
        return UniPoly(ctx, [ctx.zero, ctx.one])

    @staticmethod
    def constant(e: FieldElement) -> "UniPoly":
        return UniPoly(e.ctx, [e])

    def _reps(self) -> list:
        return [c.rep for c in self.coeffs]

    @classmethod
    def _from_reps(cls, ctx: FieldCtx, reps) -> "UniPoly":
        out = object.__new__(cls)
        out.ctx = ctx
        out.coeffs = tuple(FieldElement(ctx, r) for r in _rp_trim(ctx, list(reps)))
        return out

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def _check(self, other: "UniPoly") -> None:
        if not isinstance(other, UniPoly) or other.ctx is not self.ctx:
            raise IncompatibleContexts("mixed polynomial contexts")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.ctx,
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.ctx,
            [self.coefficient(i) - other.coefficient(i) for i in range(n)],
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        return UniPoly._from_reps(
            self.ctx, _rp_mul(self.ctx, self._reps(), other._reps())
        )

    def __rmul__(self, other) -> "UniPoly":
        if isinstance(other, FieldElement):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: FieldElement) -> "UniPoly":
        return UniPoly(self.ctx, [c * a for a in self.coeffs])

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly(self.ctx, [self.ctx.one])
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        q, r = _rp_divmod(self.ctx, self._reps(), other._reps())
        return UniPoly._from_reps(self.ctx, q), UniPoly._from_reps(self.ctx, r)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.ctx is other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx._key, self.coeffs))

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.leading().is_one():
            return self
        return self.scale(self.leading().inverse())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        g = _rp_gcd(self.ctx, self._reps(), other._reps())
        return UniPoly._from_reps(self.ctx, g)

    def xgcd(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly", "UniPoly"]:
        """Monic gcd ``g`` with cofactors: ``u*self + v*other = g``."""
        self._check(other)
        ctx = self.ctx
        r0, r1 = self, other
        u0, u1 = UniPoly(ctx, [1]), UniPoly(ctx, [])
        v0, v1 = UniPoly(ctx, []), UniPoly(ctx, [1])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        if r0.is_zero():
            return r0, u0, v0
        c = r0.leading().inverse()
        return r0.scale(c), u0.scale(c), v0.scale(c)

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.ctx,
            [self.coeffs[i] * i for i in range(1, len(self.coeffs))],
        )

    def eval(self, x: FieldElement) -> FieldElement:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        self._check(inner)
        acc = UniPoly(self.ctx, [])
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly(self.ctx, [c])
        return acc

    def pow_mod(self, e: int, mod: "UniPoly") -> "UniPoly":
        self._check(mod)
        r = _rp_pow_mod(self.ctx, self._reps(), e, mod._reps())
        return UniPoly._from_reps(self.ctx, r)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly(self.ctx, [self.ctx.zero] * k + list(self.coeffs))

    # -- squarefree structure -------------------------------------------------

    def pth_root(self) -> "UniPoly":
        """Exact p-th root of a polynomial in K[x^p] (finite K)."""
        p = self.ctx.char
        if p == 0:
            raise ValueError("p-th root needs positive characteristic")
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p == 0:
                out.append(self.ctx.pth_root(c))
            elif not c.is_zero():
                raise ValueError("polynomial is not a p-th power")
        return UniPoly(self.ctx, out)

    def squarefree_decomposition(self) -> list[tuple["UniPoly", int]]:
        """Monic pairwise-coprime squarefree factors with multiplicities."""
        if self.degree() < 1:
            return []
        f = self.monic()
        if self.ctx.char == 0:
            return _yun(f)
        return _musser(f)

    def squarefree_part(self) -> "UniPoly":
        out = UniPoly(self.ctx, [1])
        for g, _ in self.squarefree_decomposition():
            out = out * g
        return out

    # -- factorization ----------------------------------------------------------

    def factor(self) -> list[tuple["UniPoly", int]]:
        """Monic irreducible factors with multiplicities, canonically sorted.

        The unit is implicit: ``self = leading() * prod(g**e)``.
        """
        if self.degree() < 1:
            return []
        out: list[tuple[UniPoly, int]] = []
        for part, mult in self.squarefree_decomposition():
            for g in _factor_squarefree(part):
                out.append((g, mult))
        out.sort(key=lambda ge: _poly_key(ge[0]))
        return out

    def is_irreducible(self) -> bool:
        if self.degree() < 1:
            return False
        if self.ctx.char > 0:
            from .field import _rp_is_irreducible

            return _rp_is_irreducible(self.ctx, self.monic()._reps())
        fs = self.factor()
        return len(fs) == 1 and fs[0][1] == 1

    def roots(self) -> list[FieldElement]:
        """Distinct roots in the coefficient field, sorted canonically."""
        return [r for r, _ in self.roots_with_multiplicity()]

    def roots_with_multiplicity(self) -> list[tuple[FieldElement, int]]:
        if self.degree() < 1:
            return []
        ctx = self.ctx
        if ctx.order is not None and ctx.order <= 256:
            found = []
            for e in ctx.elements():
                if self.eval(e).is_zero():
                    f, mult = self, 0
                    lin = UniPoly(ctx, [-e, ctx.one])
                    while True:
                        q, r = divmod(f, lin)
                        if not r.is_zero():
                            break
                        f, mult = q, mult + 1
                    found.append((e, mult))
            found.sort(key=lambda rm: rm[0].sort_key())
            return found
        out = [
            (-g.coeffs[0], mult) for g, mult in self.factor() if g.degree() == 1
        ]
        out.sort(key=lambda rm: rm[0].sort_key())
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            s = str(c)
            if i == 0:
                parts.append(s)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            if s == "1":
                parts.append(mono)
            elif s == "-1":
                parts.append("-" + mono)
            elif "+" in s or "-" in s[1:]:
                parts.append(f"({s})*{mono}")
            else:
                parts.append(f"{s}*{mono}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"<UniPoly {self} over {self.ctx.descriptor()}>"


def _poly_key(g: UniPoly):
    return (g.degree(), tuple(c.sort_key() for c in g.coeffs))


def _yun(f: UniPoly) -> list[tuple[UniPoly, int]]:
    df = f.derivative()
    a = f.gcd(df)
    b, c = f // a, df // a - (f // a).derivative()
    out, i = [], 1
    while b.degree() > 0:
        g = b.gcd(c)
        if g.degree() > 0:
            out.append((g.monic(), i))
        b, c = b // g, c // g - (b // g).derivative()
        i += 1
    return out


def _musser(f: UniPoly) -> list[tuple[UniPoly, int]]:
    p = f.ctx.char
    df = f.derivative()
    if df.is_zero():
        return [(g, e * p) for g, e in f.pth_root().squarefree_decomposition()]
    out: list[tuple[UniPoly, int]] = []
    c = f.gcd(df)
    w = f // c
    i = 1
    while w.degree() > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree() > 0:
            out.append((z.monic(), i))
        w, c = y, c // y
        i += 1
    if c.degree() > 0:
        out.extend((g, e * p) for g, e in c.pth_root().squarefree_decomposition())
    return out


# ---------------------------------------------------------------------------
# Squarefree factorization per coefficient field
# ---------------------------------------------------------------------------


def _factor_squarefree(f: UniPoly) -> list[UniPoly]:
    f = f.monic()
    if f.degree() == 1:
        return [f]
    ctx = f.ctx
    if ctx.char > 0:
        return _factor_finite(f)
    if ctx.kind == "rationals":
        return _factor_rationals(f)
    return _factor_trager(f)


def _factor_finite(f: UniPoly) -> list[UniPoly]:
    ctx = f.ctx
    q = ctx.order
    assert q is not None
    out: list[UniPoly] = []
    x = UniPoly.x(ctx)
    h, rest = x, f
    d = 0
    while rest.degree() > 2 * (d + 1) - 1 and rest.degree() > 0:
        d += 1
        h = h.pow_mod(q, rest)
        g = (h - x).gcd(rest)
        if g.degree() > 0:
            out.extend(_edf(g, d))
            rest = rest // g
            h = h % rest
    if rest.degree() > 0:
        out.append(rest.monic())
    return out


def _edf(f: UniPoly, d: int) -> list[UniPoly]:
    """Split a product of degree-``d`` irreducibles (Cantor-Zassenhaus)."""
    ctx = f.ctx
    if f.degree() == d:
        return [f.monic()]
    q = ctx.order
    assert q is not None
    p = ctx.char
    k = ctx.absdegree
    tag = f"{ctx.descriptor()}|{f}|edf"
    attempt = 0
    stack, out = [f.monic()], []
    while stack:
        g = stack.pop()
        if g.degree() == d:
            out.append(g)
            continue
        while True:
            attempt += 1
            rng = _seeded_rng(tag, str(attempt))
            r = UniPoly(
                ctx, [ctx.element_at(rng.randrange(q)) for _ in range(g.degree())]
            )
            if r.degree() < 1:
                continue
            if p == 2:
                w = UniPoly(ctx, [])
                acc = r % g
                for _ in range(k * d):
                    w = (w + acc) % g
                    acc = acc.pow_mod(2, g)
                split = w.gcd(g)
            else:
                w = r.pow_mod((q**d - 1) // 2, g)
                split = (w - UniPoly(ctx, [1])).gcd(g)
            if 0 < split.degree() < g.degree():
                stack.append(split.monic())
                stack.append((g // split).monic())
                break
    return out


def _factor_rationals(f: UniPoly) -> list[UniPoly]:
    import sympy

    t = sympy.Symbol("t")
    expr_coeffs = [
        sympy.Rational(c.rep.numerator, c.rep.denominator)
        for c in reversed(f.coeffs)
    ]
    _, factors = sympy.Poly(expr_coeffs, t, domain="QQ").factor_list()
    ctx = f.ctx
    out = []
    for g, mult in factors:
        assert mult == 1, "squarefree input must factor without multiplicity"
        coeffs = [
            ctx.from_fraction(Fraction(int(c.p), int(c.q)))
            for c in reversed(g.all_coeffs())
        ]
        out.append(UniPoly(ctx, coeffs).monic())
    return out


def _factor_trager(f: UniPoly) -> list[UniPoly]:
    """Factor a squarefree monic poly over QQ(alpha, ...) by norm descent."""
    ctx = f.ctx
    base = ctx.base
    k = ctx.deg_step
    minpoly = UniPoly(base, [FieldElement(base, r) for r in ctx.modulus])
    alpha = ctx.gen()
    for s in range(0, 40):
        shifted = f.compose(UniPoly(ctx, [alpha * s, ctx.one]))
        norm = _norm_poly(shifted, minpoly, k)
        if norm.gcd(norm.derivative()).degree() == 0:
            break
    else:
        raise RuntimeError("no squarefree norm found; input may not be squarefree")
    pieces = _factor_squarefree_over(norm)
    out = []
    shift_back = UniPoly(ctx, [-(alpha * s), ctx.one])
    for piece in pieces:
        lifted = UniPoly(ctx, [embed(c, ctx) for c in piece.coeffs])
        g = shifted.gcd(lifted)
        if g.degree() > 0:
            out.append(g.compose(shift_back).monic())
    total = UniPoly(ctx, [1])
    for g in out:
        total = total * g
    assert total == f.monic(), "norm descent must reproduce the input"
    return out


def _factor_squarefree_over(f: UniPoly) -> list[UniPoly]:
    if f.ctx.kind == "rationals":
        return _factor_rationals(f)
    return _factor_trager(f)


def _norm_poly(h: UniPoly, minpoly: UniPoly, k: int) -> UniPoly:
    """Norm of ``h`` down one tower step, by evaluation and interpolation.

    Coefficients of ``h`` live in base[alpha]; replacing alpha by a fresh
    variable and taking Res_alpha against the minimal polynomial multiplies
    the conjugates together.  The resultant is evaluated at enough base
    points to interpolate the degree bound deg(h) * k exactly.
    """
    ctx = h.ctx
    base = ctx.base
    bound = h.degree() * k
    points: list[FieldElement] = []
    values: list[FieldElement] = []
    n = 0
    while len(points) <= bound:
        cand = base.from_int((-1) ** n * ((n + 1) // 2))
        n += 1
        if any(p == cand for p in points):
            continue
        # H(cand, w): substitute z = cand, leaving a univariate in w (the
        # lifted generator); its coefficients come from the reps of h's
        # coefficients, which are polynomials in alpha of degree < k.
        w_coeffs = [base.zero] * k
        zpow = base.one
        for c in h.coeffs:
            for j in range(k):
                w_coeffs[j] = w_coeffs[j] + FieldElement(base, c.rep[j]) * zpow
            zpow = zpow * cand
        hv = UniPoly(base, w_coeffs)
        values.append(_res_univ(minpoly, hv))
        points.append(cand)
    return _lagrange(points, values)


def _res_univ(a: UniPoly, b: UniPoly) -> FieldElement:
    """Resultant of univariates over a field, by the Euclidean recursion."""
    ctx = a.ctx
    if a.is_zero() or b.is_zero():
        return ctx.zero
    res = ctx.one
    sign = 1
    while b.degree() > 0:
        r = a % b
        if r.is_zero():
            return ctx.zero if b.degree() > 0 else res
        if (a.degree() * b.degree()) % 2 == 1:
            sign = -sign
        res = res * b.leading() ** (a.degree() - r.degree())
        a, b = b, r
    res = res * b.coeffs[0] ** a.degree()
    if sign < 0:
        res = -res
    return res


def _lagrange(points: list[FieldElement], values: list[FieldElement]) -> UniPoly:
    ctx = points[0].ctx
    out = UniPoly(ctx, [])
    for i, (xi, yi) in enumerate(zip(points, values)):
        num = UniPoly(ctx, [yi])
        den = ctx.one
        for j, xj in enumerate(points):
            if j == i:
                continue
            num = num * UniPoly(ctx, [-xj, ctx.one])
            den = den * (xi - xj)
        out = out + num.scale(den.inverse())
    return out
