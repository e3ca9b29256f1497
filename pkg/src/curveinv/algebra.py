"""Sparse multivariate polynomials, parsing, resultants, and squarefree
structure.

:class:`MPoly` stores ``{exponent tuple: coefficient}`` over a fixed variable
alphabet, usually ``(x, y)`` and occasionally ``(x, y, z)`` or ``(t, x, y)``.
Resultants go through a fraction-free Bareiss elimination of the Sylvester
matrix, so every intermediate division is exact.  The bivariate gcd is a
primitive polynomial-remainder sequence; on top of it sits a squarefree
decomposition that works uniformly in characteristic zero and p, peeling
p-th powers when both partials collapse.

Printing and parsing agree: ``parse_poly(str(f), f.ctx, f.vars) == f``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    IncompatibleContexts,
    InternalCheckError,
    ParseError,
    WrongVariables,
)
from .field import FieldCtx, FieldElement, embed
from .unipoly import UniPoly


class MPoly:
    """Immutable sparse polynomial in ``len(vars)`` variables."""

    __slots__ = ("ctx", "vars", "terms")

    def __init__(self, ctx: FieldCtx, vars: tuple[str, ...], terms: dict):
        clean = {}
        for exps, c in terms.items():
            if isinstance(c, int):
                c = ctx.from_int(c)
            elif isinstance(c, Fraction):
                c = ctx.from_fraction(c)
            if c.ctx is not ctx:
                raise IncompatibleContexts("coefficient from another context")
            if not c.is_zero():
                clean[tuple(exps)] = c
        self.ctx = ctx
        self.vars = tuple(vars)
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(ctx: FieldCtx, vars: tuple[str, ...]) -> "MPoly":
        return MPoly(ctx, vars, {})

    @staticmethod
    def constant(ctx: FieldCtx, vars: tuple[str, ...], c) -> "MPoly":
        return MPoly(ctx, vars, {(0,) * len(vars): c})

    @staticmethod
    def variable(ctx: FieldCtx, vars: tuple[str, ...], name: str) -> "MPoly":
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return MPoly(ctx, vars, {tuple(e): ctx.one})

    @staticmethod
    def from_unipoly(u: UniPoly, vars: tuple[str, ...], var_idx: int) -> "MPoly":
        terms = {}
        for i, c in enumerate(u.coeffs):
            e = [0] * len(vars)
            e[var_idx] = i
            terms[tuple(e)] = c
        return MPoly(u.ctx, vars, terms)

    # -- structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order(self) -> int | None:
        """Minimal total degree of a term; None for the zero polynomial."""
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def degree_in(self, var_idx: int) -> int:
        if not self.terms:
            return -1
        return max(e[var_idx] for e in self.terms)

    def order_in(self, var_idx: int) -> int | None:
        if not self.terms:
            return None
        return min(e[var_idx] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def constant_term(self) -> FieldElement:
        return self.terms.get((0,) * len(self.vars), self.ctx.zero)

    def _check(self, other: "MPoly") -> None:
        if (
            not isinstance(other, MPoly)
            or other.ctx is not self.ctx
            or other.vars != self.vars
        ):
            raise IncompatibleContexts("mixed polynomial rings")

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            terms[e] = c if cur is None else cur + c
        return MPoly(self.ctx, self.vars, terms)

    def __sub__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            terms[e] = -c if cur is None else cur - c
        return MPoly(self.ctx, self.vars, terms)

    def __neg__(self) -> "MPoly":
        return MPoly(self.ctx, self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, FieldElement):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.ctx.from_int(other))
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                cur = terms.get(e)
                terms[e] = c if cur is None else cur + c
        return MPoly(self.ctx, self.vars, terms)

    def __rmul__(self, other) -> "MPoly":
        if isinstance(other, (FieldElement, int)):
            return self.__mul__(other)
        return NotImplemented

    def scale(self, c: FieldElement) -> "MPoly":
        if c.is_zero():
            return MPoly.zero(self.ctx, self.vars)
        return MPoly(self.ctx, self.vars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = MPoly.constant(self.ctx, self.vars, self.ctx.one)
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return (
            self.ctx is other.ctx
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash(
            (self.ctx._key, self.vars, tuple(sorted(self.terms.items(), key=lambda t: t[0])))
        )

    # -- calculus and substitution -------------------------------------------------

    def partial(self, var_idx: int) -> "MPoly":
        terms = {}
        for e, c in self.terms.items():
            k = e[var_idx]
            if k == 0:
                continue
            ne = list(e)
            ne[var_idx] = k - 1
            key = tuple(ne)
            add = c * k
            cur = terms.get(key)
            terms[key] = add if cur is None else cur + add
        return MPoly(self.ctx, self.vars, terms)

    def subs_const(self, var_idx: int, value: FieldElement) -> "MPoly":
        terms: dict = {}
        powers = {0: self.ctx.one}

        def vpow(k: int) -> FieldElement:
            if k not in powers:
                powers[k] = vpow(k - 1) * value
            return powers[k]

        for e, c in self.terms.items():
            ne = list(e)
            k = ne[var_idx]
            ne[var_idx] = 0
            key = tuple(ne)
            add = c * vpow(k)
            cur = terms.get(key)
            terms[key] = add if cur is None else cur + add
        return MPoly(self.ctx, self.vars, terms)

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Simultaneous substitution; one image per variable."""
        if len(images) != len(self.vars):
            raise ValueError("one image per variable required")
        for img in images:
            self._check(img)
        caches: list[list[MPoly]] = [
            [MPoly.constant(self.ctx, self.vars, self.ctx.one)] for _ in self.vars
        ]

        def vpow(i: int, k: int) -> MPoly:
            cache = caches[i]
            while len(cache) <= k:
                cache.append(cache[-1] * images[i])
            return cache[k]

        out = MPoly.zero(self.ctx, self.vars)
        for e, c in self.terms.items():
            term = MPoly.constant(self.ctx, self.vars, c)
            for i, k in enumerate(e):
                if k:
                    term = term * vpow(i, k)
            out = out + term
        return out

    def eval(self, point: Sequence[FieldElement]) -> FieldElement:
        acc = self.ctx.zero
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * point[i] ** k
            acc = acc + v
        return acc

    def to_unipoly(self, var_idx: int) -> UniPoly:
        coeffs = [self.ctx.zero] * (self.degree_in(var_idx) + 1)
        for e, c in self.terms.items():
            if any(k != 0 for i, k in enumerate(e) if i != var_idx):
                raise ValueError("polynomial involves other variables")
            coeffs[e[var_idx]] = c
        return UniPoly(self.ctx, coeffs)

    def coeff_list(self, var_idx: int) -> list["MPoly"]:
        """Coefficients of powers of one variable, as polynomials in the rest."""
        n = self.degree_in(var_idx)
        buckets: list[dict] = [{} for _ in range(n + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[var_idx]
            ne[var_idx] = 0
            buckets[k][tuple(ne)] = c
        return [MPoly(self.ctx, self.vars, b) for b in buckets]

    # -- division ----------------------------------------------------------------

    def _lead(self) -> tuple[tuple[int, ...], FieldElement]:
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def divexact(self, d: "MPoly") -> "MPoly":
        """Exact division; raises InternalCheckError if it does not divide."""
        self._check(d)
        if d.is_zero():
            raise DivisionByZero("exact division by zero")
        rem = dict(self.terms)
        out: dict = {}
        de, dc = d._lead()
        dc_inv = dc.inverse()
        while rem:
            re = max(rem, key=lambda t: (sum(t), t))
            qe = tuple(a - b for a, b in zip(re, de))
            if any(k < 0 for k in qe):
                raise InternalCheckError("division is not exact")
            qc = rem[re] * dc_inv
            out[qe] = qc
            for e2, c2 in d.terms.items():
                key = tuple(a + b for a, b in zip(qe, e2))
                cur = rem.get(key, self.ctx.zero)
                nv = cur - qc * c2
                if nv.is_zero():
                    rem.pop(key, None)
                else:
                    rem[key] = nv
        return MPoly(self.ctx, self.vars, out)

    def normalized(self) -> "MPoly":
        """Scaled so the graded-lex leading coefficient is one."""
        if self.is_zero():
            return self
        _, c = self._lead()
        if c.is_one():
            return self
        return self.scale(c.inverse())

    # -- characteristic p ---------------------------------------------------------

    def pth_root(self) -> "MPoly":
        p = self.ctx.char
        if p == 0:
            raise ValueError("p-th root needs positive characteristic")
        terms = {}
        for e, c in self.terms.items():
            if any(k % p for k in e):
                raise ValueError("polynomial is not a p-th power")
            terms[tuple(k // p for k in e)] = self.ctx.pth_root(c)
        return MPoly(self.ctx, self.vars, terms)

    # -- presentation ----------------------------------------------------------------

    def sort_key(self):
        return tuple(
            (e, c.sort_key()) for e, c in sorted(self.terms.items(), key=lambda t: t[0])
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(
            self.terms.items(),
            key=lambda t: (sum(t[0]), tuple(-k for k in t[0])),
        )
        parts = []
        for e, c in items:
            monos = []
            for name, k in zip(self.vars, e):
                if k == 1:
                    monos.append(name)
                elif k > 1:
                    monos.append(f"{name}^{k}")
            s = str(c)
            if not monos:
                parts.append(s)
                continue
            m = "*".join(monos)
            if s == "1":
                parts.append(m)
            elif s == "-1":
                parts.append("-" + m)
            elif "+" in s or "-" in s[1:]:
                parts.append(f"({s})*{m}")
            else:
                parts.append(f"{s}*{m}")
        return "+".join(parts).replace("+-", "-")

    def __repr__(self) -> str:
        return f"<MPoly {self} over {self.ctx.descriptor()}>"


def embed_poly(f: MPoly, target: FieldCtx) -> MPoly:
    """Coefficientwise field embedding; keeps the variable alphabet."""
    return MPoly(target, f.vars, {e: embed(c, target) for e, c in f.terms.items()})


# ---------------------------------------------------------------------------
# Resultants
# ---------------------------------------------------------------------------


def resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Res of f and g with respect to ``var``, by fraction-free elimination.

    Row convention: the ``deg g`` rows of f-coefficients come first.  With it,
    Res_y(y^2 - x^3, y) = -x^3 and Res_y(y - x, y + x) = 2x.
    """
    f._check(g)
    idx = f.vars.index(var)
    if f.is_zero() or g.is_zero():
        return MPoly.zero(f.ctx, f.vars)
    fc = f.coeff_list(idx)
    gc = g.coeff_list(idx)
    m, n = len(fc) - 1, len(gc) - 1
    one = MPoly.constant(f.ctx, f.vars, f.ctx.one)
    if m == 0 and n == 0:
        return one
    if m == 0:
        return f**n
    if n == 0:
        return g**m
    size = m + n
    zero = MPoly.zero(f.ctx, f.vars)
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(reversed(fc)) + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(reversed(gc)) + [zero] * (m - 1 - i))
    assert all(len(r) == size for r in rows)
    return _bareiss_det(rows)


def _bareiss_det(mat: list[list[MPoly]]) -> MPoly:
    n = len(mat)
    ctx, vars = mat[0][0].ctx, mat[0][0].vars
    if n == 0:
        return MPoly.constant(ctx, vars, ctx.one)
    sign = 1
    prev = MPoly.constant(ctx, vars, ctx.one)
    for k in range(n - 1):
        if mat[k][k].is_zero():
            pivot_row = next(
                (i for i in range(k + 1, n) if not mat[i][k].is_zero()), None
            )
            if pivot_row is None:
                return MPoly.zero(ctx, vars)
            mat[k], mat[pivot_row] = mat[pivot_row], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = num.divexact(prev)
            mat[i][k] = MPoly.zero(ctx, vars)
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    return -det if sign < 0 else det


# ---------------------------------------------------------------------------
# Bivariate gcd and squarefree structure
# ---------------------------------------------------------------------------


def _content_in(f: MPoly, main_idx: int, other_idx: int) -> UniPoly:
    coeffs = f.coeff_list(main_idx)
    cont = UniPoly(f.ctx, [])
    for c in coeffs:
        if c.is_zero():
            continue
        cont = cont.gcd(c.to_unipoly(other_idx))
        if cont.degree() == 0:
            break
    return cont


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder of coefficient vectors in the main variable."""
    lead = b[-1]
    r = list(a)
    while len(r) >= len(b) and r:
        if r[-1].is_zero():
            r.pop()
            continue
        shift = len(r) - len(b)
        top = r[-1]
        r = [c * lead for c in r]
        for j in range(len(b)):
            r[shift + j] = r[shift + j] - top * b[j]
        r.pop()
        while r and r[-1].is_zero():
            r.pop()
    return r


def gcd_bivar(f: MPoly, g: MPoly, main: str = "y") -> MPoly:
    """Monic-normalized gcd of two bivariate polynomials."""
    f._check(g)
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    mi = f.vars.index(main)
    oi = next(i for i in range(len(f.vars)) if i != mi)
    dm_f, dm_g = f.degree_in(mi), g.degree_in(mi)
    if dm_f == 0 and dm_g == 0:
        u = f.to_unipoly(oi).gcd(g.to_unipoly(oi))
        return MPoly.from_unipoly(u, f.vars, oi)
    if dm_f == 0:
        u = f.to_unipoly(oi).gcd(_content_in(g, mi, oi))
        return MPoly.from_unipoly(u, f.vars, oi)
    if dm_g == 0:
        u = g.to_unipoly(oi).gcd(_content_in(f, mi, oi))
        return MPoly.from_unipoly(u, f.vars, oi)
    cf, cg = _content_in(f, mi, oi), _content_in(g, mi, oi)
    cont = cf.gcd(cg)
    fp = f.divexact(MPoly.from_unipoly(cf, f.vars, oi))
    gp = g.divexact(MPoly.from_unipoly(cg, f.vars, oi))
    a, b = fp.coeff_list(mi), gp.coeff_list(mi)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _prem(a, b)
        if not r:
            break
        rp = MPoly.zero(f.ctx, f.vars)
        for k, c in enumerate(r):
            e = [0, 0]
            e[mi] = k
            rp = rp + c * MPoly(f.ctx, f.vars, {tuple(e): f.ctx.one})
        rc = _content_in(rp, mi, oi)
        rp = rp.divexact(MPoly.from_unipoly(rc, f.vars, oi))
        a, b = b, rp.coeff_list(mi)
    gcd_pp = MPoly.zero(f.ctx, f.vars)
    for k, c in enumerate(b):
        e = [0, 0]
        e[mi] = k
        gcd_pp = gcd_pp + c * MPoly(f.ctx, f.vars, {tuple(e): f.ctx.one})
    out = gcd_pp * MPoly.from_unipoly(cont, f.vars, oi)
    return out.normalized()


def squarefree_decomposition(f: MPoly) -> list[tuple[MPoly, int]]:
    """Pairwise-coprime squarefree bivariate factors with multiplicities.

    Uniform in the characteristic: the triple gcd (f, f_x, f_y) isolates
    the tame radical, a Musser-style peel recovers tame multiplicities, and
    whatever remains is an exact p-th power handled by recursion.
    """
    if f.degree() < 1:
        return []
    fx, fy = f.partial(0), f.partial(1)
    a = gcd_bivar(gcd_bivar(f, fx), fy)
    w = f.divexact(a)
    out: list[tuple[MPoly, int]] = []
    c, i = a, 1
    while w.degree() > 0:
        y = gcd_bivar(w, c)
        z = w.divexact(y)
        if z.degree() > 0:
            out.append((z.normalized(), i))
        w = y
        c = c.divexact(y)
        i += 1
    if c.degree() > 0:
        if f.ctx.char == 0:
            raise InternalCheckError("leftover factor in characteristic zero")
        out.extend(
            (g, e * f.ctx.char) for g, e in squarefree_decomposition(c.pth_root())
        )
    out.sort(key=lambda ge: (ge[0].degree(), ge[0].sort_key()))
    return out


def squarefree_part(f: MPoly) -> tuple[MPoly, bool]:
    """The reduced polynomial with the same zero set, and whether f already was."""
    dec = squarefree_decomposition(f)
    part = MPoly.constant(f.ctx, f.vars, f.ctx.one)
    for g, _ in dec:
        part = part * g
    reduced = all(e == 1 for _, e in dec)
    return part, reduced


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _generator_atoms(ctx: FieldCtx) -> dict[str, FieldElement]:
    atoms: dict[str, FieldElement] = {}
    c: FieldCtx | None = ctx
    while c is not None and c.kind == "extension":
        atoms.setdefault(c.gen_name, embed(c.gen(), ctx))
        c = c.base
    return atoms


class _Parser:
    def __init__(self, text: str, ctx: FieldCtx, vars: tuple[str, ...]):
        self.text = text.replace("−", "-").replace("**", "^")
        self.pos = 0
        self.ctx = ctx
        self.vars = vars
        self.gens = _generator_atoms(ctx)

    def error(self, msg: str):
        raise ParseError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> MPoly:
        out = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return out

    def expr(self) -> MPoly:
        ch = self.peek()
        negate = False
        if ch in "+-":
            self.take()
            negate = ch == "-"
        out = self.term()
        if negate:
            out = -out
        while True:
            ch = self.peek()
            if ch == "+":
                self.take()
                out = out + self.term()
            elif ch == "-":
                self.take()
                out = out - self.term()
            else:
                return out

    def term(self) -> MPoly:
        out = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.take()
                out = out * self.factor()
            elif ch == "/":
                self.take()
                d = self.factor()
                if d.degree() > 0:
                    self.error("division only by constants")
                c = d.constant_term()
                if c.is_zero():
                    self.error("division by zero")
                out = out * c.inverse()
            else:
                return out

    def factor(self) -> MPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.integer()
            base = base**e
        return base

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a nonnegative integer")
        return int(self.text[start : self.pos])

    def atom(self) -> MPoly:
        ch = self.peek()
        if ch == "(":
            self.take()
            out = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return out
        if ch.isdigit():
            return MPoly.constant(self.ctx, self.vars, self.integer())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            if name in self.vars:
                return MPoly.variable(self.ctx, self.vars, name)
            if name.lower() in self.vars:
                return MPoly.variable(self.ctx, self.vars, name.lower())
            if name in self.gens:
                return MPoly.constant(self.ctx, self.vars, self.gens[name])
            self.pos = start
            raise WrongVariables(
                f"unknown symbol {name!r}; expected one of {', '.join(self.vars)}",
                start,
            )
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_poly(text: str, ctx: FieldCtx, vars: tuple[str, ...] = ("x", "y")) -> MPoly:
    """Parse ``text`` into an :class:`MPoly` over ``ctx``.

    Grammar: integer literals, the given variables (uppercase aliases
    accepted), generator names of the coefficient field, ``+ - * / ^`` and
    parentheses; ``/`` only by a constant.  Raises :class:`ParseError` with a
    position, or :class:`WrongVariables` for a stray identifier.
    """
    return _Parser(text, ctx, vars).parse()
